//! Argument parsing helpers and the CLI error type.

use hypfib_core::rational::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: String,
    pub message: String,
}

impl CliError {
    pub fn new(kind: &str, message: impl Into<String>) -> Self {
        CliError {
            kind: kind.to_string(),
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new("usage", message)
    }
}

impl From<hypfib_core::Error> for CliError {
    fn from(e: hypfib_core::Error) -> Self {
        CliError::new(e.kind(), e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new("io", e.to_string())
    }
}

pub fn rational_arg(name: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|_| CliError::usage(format!("--{name}: expected p or p/q, got {s:?}")))
}

/// `"lo..hi"`, `"lo..=hi"` (both inclusive) or a single value.
pub fn parse_range<T>(name: &str, s: &str) -> Result<(T, T), CliError>
where
    T: std::str::FromStr + PartialOrd + Copy,
{
    let bad = || CliError::usage(format!("--{name}: expected lo..hi or a single value, got {s:?}"));
    let one = |t: &str| t.trim().parse::<T>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (one(lo)?, one(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = one(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(CliError::new("empty_range", format!("--{name}: {s} is empty")));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range::<u32>("g", "13..40").unwrap(), (13, 40));
        assert_eq!(parse_range::<u32>("g", "12..=12").unwrap(), (12, 12));
        assert_eq!(parse_range::<i64>("ksq", "-3..7").unwrap(), (-3, 7));
        assert_eq!(parse_range::<u32>("g", "9").unwrap(), (9, 9));
        assert_eq!(parse_range::<u32>("g", "9..3").unwrap_err().kind, "empty_range");
        assert_eq!(parse_range::<u32>("g", "a..3").unwrap_err().kind, "usage");
    }
}
