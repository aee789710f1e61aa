//! Experiments and identity suites behind the `gaussprime` command.

pub mod commands;
pub mod report;
pub mod suites;

/// Parses a count such as `100000`, `1e8` or `2.5e6`; the value must be a non-negative integer.
pub fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(v) = s.parse::<u64>() {
        return Ok(v);
    }
    let f: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !f.is_finite() || f < 0.0 || f.fract() != 0.0 || f > u64::MAX as f64 {
        return Err(format!("`{s}` is not a non-negative integer"));
    }
    Ok(f as u64)
}
