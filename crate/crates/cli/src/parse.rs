//! Parsers for the human-facing argument formats: angles in multiples of pi,
//! complex coefficients, and comma-separated vectors.

use num_complex::Complex64;

/// Parses an angle given either as plain radians ("1.5708") or in multiples
/// of pi ("pi", "-pi/2", "5pi/6", "8.69pi/6", "0.5pi").
pub fn parse_angle(input: &str) -> Result<f64, String> {
    let t = input.trim();
    if let Some(idx) = t.find("pi") {
        let coef_str = &t[..idx];
        let rest = &t[idx + 2..];
        let coef = match coef_str.trim() {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other
                .parse::<f64>()
                .map_err(|_| format!("bad angle '{t}': cannot parse coefficient"))?,
        };
        let divisor = if rest.is_empty() {
            1.0
        } else {
            let d = rest
                .strip_prefix('/')
                .ok_or_else(|| format!("bad angle '{t}': expected '<coef>pi/<div>'"))?
                .trim()
                .parse::<f64>()
                .map_err(|_| format!("bad angle '{t}': cannot parse divisor"))?;
            if d == 0.0 {
                return Err(format!("bad angle '{t}': zero divisor"));
            }
            d
        };
        Ok(coef * std::f64::consts::PI / divisor)
    } else {
        t.parse::<f64>()
            .map_err(|_| format!("bad angle '{t}': expected radians or multiples of pi"))
    }
}

/// Parses a complex coefficient: "1", "-0.5", "i", "-i", "2i", "1+2i",
/// "0.3-0.4i".
pub fn parse_complex(input: &str) -> Result<Complex64, String> {
    let t: String = input.trim().replace(' ', "");
    if t.is_empty() {
        return Err("empty complex number".into());
    }
    if !t.contains('i') {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| format!("bad complex number '{t}'"));
    }
    let bytes = t.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let c = bytes[idx] as char;
        if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
            split = Some(idx);
            break;
        }
    }
    let (re_str, im_str) = match split {
        Some(i) => (&t[..i], &t[i..]),
        None => ("", &t[..]),
    };
    let im_core = im_str
        .strip_suffix('i')
        .ok_or_else(|| format!("bad complex number '{t}': real part must come first"))?;
    let im = match im_core {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other
            .parse::<f64>()
            .map_err(|_| format!("bad complex number '{t}'"))?,
    };
    let re = if re_str.is_empty() {
        0.0
    } else {
        re_str
            .parse::<f64>()
            .map_err(|_| format!("bad complex number '{t}'"))?
    };
    Ok(Complex64::new(re, im))
}

/// Parses "x,y,z" into a vector.
pub fn parse_vec3(input: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = input.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("bad vector '{input}': expected 'x,y,z'"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .parse::<f64>()
            .map_err(|_| format!("bad vector '{input}': component '{part}'"))?;
    }
    Ok(out)
}

/// Parses four comma-separated angles (each in the [`parse_angle`] syntax).
pub fn parse_angle_quad(input: &str) -> Result<[f64; 4], String> {
    let parts: Vec<&str> = input.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("bad angles '{input}': expected 'a,b,c,d'"));
    }
    let mut out = [0.0; 4];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = parse_angle(part)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn angles() {
        assert_eq!(parse_angle("0").unwrap(), 0.0);
        assert!((parse_angle("1.25").unwrap() - 1.25).abs() < 1e-15);
        assert!((parse_angle("pi").unwrap() - PI).abs() < 1e-15);
        assert!((parse_angle("-pi/2").unwrap() + PI / 2.0).abs() < 1e-15);
        assert!((parse_angle("5pi/6").unwrap() - 5.0 * PI / 6.0).abs() < 1e-15);
        assert!((parse_angle("8.69pi/6").unwrap() - 8.69 * PI / 6.0).abs() < 1e-15);
        assert!((parse_angle("0.5pi").unwrap() - 0.5 * PI).abs() < 1e-15);
        assert!(parse_angle("pi/0").is_err());
        assert!(parse_angle("banana").is_err());
    }

    #[test]
    fn complexes() {
        assert_eq!(parse_complex("1").unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(parse_complex("-0.5").unwrap(), Complex64::new(-0.5, 0.0));
        assert_eq!(parse_complex("i").unwrap(), Complex64::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert_eq!(parse_complex("2i").unwrap(), Complex64::new(0.0, 2.0));
        assert_eq!(parse_complex("1+2i").unwrap(), Complex64::new(1.0, 2.0));
        assert_eq!(parse_complex("0.3-0.4i").unwrap(), Complex64::new(0.3, -0.4));
        assert_eq!(parse_complex("1e-3+2e-4i").unwrap(), Complex64::new(1e-3, 2e-4));
        assert!(parse_complex("i+1").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn vectors_and_quads() {
        assert_eq!(parse_vec3("1,2,3").unwrap(), [1.0, 2.0, 3.0]);
        assert!(parse_vec3("1,2").is_err());
        let quad = parse_angle_quad("0,pi/8,6pi/8,3pi/8").unwrap();
        assert!((quad[2] - 6.0 * PI / 8.0).abs() < 1e-15);
        assert!(parse_angle_quad("0,1").is_err());
    }
}
