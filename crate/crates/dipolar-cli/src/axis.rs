//! Parsing of angle tokens and axis specifications.
//!
//! Angles accept decimals or the symbolic tokens `pi`, `pi/2`, `pi/4`
//! (optionally with a numeric prefix like `2pi`); the symbolic forms are
//! exact, which matters because the analytic route requires θ = π/2
//! bit-for-bit. Axes are either a single value or `min:max:count`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    match t {
        "pi" => return Ok(PI),
        "pi/2" => return Ok(FRAC_PI_2),
        "pi/4" => return Ok(FRAC_PI_4),
        "-pi" => return Ok(-PI),
        "-pi/2" => return Ok(-FRAC_PI_2),
        "-pi/4" => return Ok(-FRAC_PI_4),
        _ => {}
    }
    if let Some(prefix) = t.strip_suffix("pi") {
        if let Ok(mult) = prefix.parse::<f64>() {
            return Ok(mult * PI);
        }
    }
    t.parse::<f64>()
        .map_err(|_| format!("cannot parse angle '{s}'"))
}

pub fn parse_number(s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| format!("cannot parse number '{s}'"))
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|i| lo + (i as f64 / (n - 1) as f64) * (hi - lo))
        .collect()
}

/// `value` or `min:max:count`, with each endpoint parsed by `elem`.
fn parse_axis_with(
    s: &str,
    elem: impl Fn(&str) -> Result<f64, String>,
) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.len() {
        1 => Ok(vec![elem(parts[0])?]),
        3 => {
            let lo = elem(parts[0])?;
            let hi = elem(parts[1])?;
            let n: usize = parts[2]
                .trim()
                .parse()
                .map_err(|_| format!("cannot parse point count '{}'", parts[2]))?;
            if n == 0 {
                return Err("axis needs at least one point".into());
            }
            if n > 1 && !(hi > lo) {
                return Err(format!("axis '{s}' needs max > min"));
            }
            Ok(linspace(lo, hi, n))
        }
        _ => Err(format!("axis '{s}' must be 'value' or 'min:max:count'")),
    }
}

/// Numeric axis (β or d).
pub fn parse_axis(s: &str) -> Result<Vec<f64>, String> {
    parse_axis_with(s, parse_number)
}

/// Angle axis (θ or φ), symbolic tokens allowed in the endpoints.
pub fn parse_angle_axis(s: &str) -> Result<Vec<f64>, String> {
    parse_axis_with(s, parse_angle)
}

/// Newtype so clap treats a whole axis as one argument value.
#[derive(Clone, Debug, PartialEq)]
pub struct AxisValues(pub Vec<f64>);

pub fn parse_axis_arg(s: &str) -> Result<AxisValues, String> {
    parse_axis(s).map(AxisValues)
}

pub fn parse_angle_axis_arg(s: &str) -> Result<AxisValues, String> {
    parse_angle_axis(s).map(AxisValues)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbolic_angles_are_exact() {
        assert_eq!(parse_angle("pi/2").unwrap(), FRAC_PI_2);
        assert_eq!(parse_angle("pi").unwrap(), PI);
        assert_eq!(parse_angle("pi/4").unwrap(), FRAC_PI_4);
        assert_eq!(parse_angle("2pi").unwrap(), 2.0 * PI);
        assert_eq!(parse_angle("0").unwrap(), 0.0);
        assert_eq!(parse_angle("1.25").unwrap(), 1.25);
        assert!(parse_angle("two-pi").is_err());
    }

    #[test]
    fn axis_forms() {
        assert_eq!(parse_axis("3").unwrap(), vec![3.0]);
        assert_eq!(parse_axis("0:10:3").unwrap(), vec![0.0, 5.0, 10.0]);
        assert!(parse_axis("0:10").is_err());
        assert!(parse_axis("10:0:5").is_err());
        assert!(parse_axis("0:10:0").is_err());
    }

    #[test]
    fn angle_axis_midpoint_hits_pi_over_two_exactly() {
        let axis = parse_angle_axis("0:pi:41").unwrap();
        assert_eq!(axis.len(), 41);
        assert_eq!(axis[20], FRAC_PI_2);
        assert_eq!(axis[40], PI);
    }
}
