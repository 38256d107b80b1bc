//! The scalar literal grammar used in CSV cells: `a+bi` for Gaussian
//! integers, `a+bw` for Eisenstein integers, `wN^e` (roots of unity) and
//! `wN[c0 c1 ...]` (general values) for order-N cyclotomics, and decimal
//! `re+imj` pairs for complex floats. Formatting lives on
//! `Scalar`'s `Display`; this module is the inverse.

use pucodes::{Scalar, ScalarKind};

use crate::CliError;

/// Parse a kind string: `complex`, `gauss`, `eisenstein`, or `cyclo:N`.
pub fn parse_kind(text: &str) -> Result<ScalarKind, CliError> {
    match text {
        "complex" => Ok(ScalarKind::Complex),
        "gauss" => Ok(ScalarKind::Gauss),
        "eisenstein" => Ok(ScalarKind::Eisenstein),
        _ => {
            if let Some(order) = text.strip_prefix("cyclo:") {
                let n: u32 = order
                    .parse()
                    .map_err(|_| CliError::usage(format!("bad cyclotomic order in kind: {text}")))?;
                if n < 1 {
                    return Err(CliError::usage("cyclotomic order must be >= 1"));
                }
                Ok(ScalarKind::Cyclotomic(n))
            } else {
                Err(CliError::usage(format!(
                    "unknown kind {text:?} (expected complex, gauss, eisenstein or cyclo:N)"
                )))
            }
        }
    }
}

/// Kind a literal unambiguously implies, if any. Bare integers imply
/// nothing and take the file-level kind.
pub fn implied_kind(text: &str) -> Option<ScalarKind> {
    let t = text.trim();
    if t.ends_with('j') {
        return Some(ScalarKind::Complex);
    }
    if let Some(rest) = t.strip_prefix('-').or(Some(t)) {
        if let Some(tail) = rest.strip_prefix('w') {
            if tail.starts_with(|c: char| c.is_ascii_digit()) {
                // wN^e or wN[...]
                let digits: String = tail.chars().take_while(|c| c.is_ascii_digit()).collect();
                if let Ok(n) = digits.parse::<u32>() {
                    return Some(ScalarKind::Cyclotomic(n));
                }
            }
        }
    }
    if t.ends_with('w') {
        return Some(ScalarKind::Eisenstein);
    }
    if t.ends_with('i') {
        return Some(ScalarKind::Gauss);
    }
    if t.contains('.') || t.contains('e') || t.contains('E') {
        return Some(ScalarKind::Complex);
    }
    None
}

/// Parse one literal as a value of `kind`.
pub fn parse_scalar(text: &str, kind: ScalarKind) -> Result<Scalar, CliError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(CliError::usage("empty scalar literal"));
    }
    match kind {
        ScalarKind::Gauss => {
            let (a, b) = parse_int_pair(t, 'i')?;
            Ok(Scalar::gauss(a, b))
        }
        ScalarKind::Eisenstein => {
            let (a, b) = parse_int_pair(t, 'w')?;
            Ok(Scalar::eisenstein(a, b))
        }
        ScalarKind::Complex => {
            let (re, im) = parse_float_pair(t)?;
            Ok(Scalar::complex(re, im))
        }
        ScalarKind::Cyclotomic(order) => parse_cyclotomic(t, order),
    }
}

fn parse_cyclotomic(t: &str, order: u32) -> Result<Scalar, CliError> {
    // bare integer
    if let Ok(n) = t.parse::<i64>() {
        return Ok(Scalar::integer(ScalarKind::Cyclotomic(order), n));
    }
    let (negate, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let tail = body
        .strip_prefix('w')
        .ok_or_else(|| CliError::usage(format!("bad cyclotomic literal: {t:?}")))?;
    let digits: String = tail.chars().take_while(|c| c.is_ascii_digit()).collect();
    let n: u32 = digits
        .parse()
        .map_err(|_| CliError::usage(format!("bad cyclotomic order in literal: {t:?}")))?;
    if n != order {
        return Err(CliError::usage(format!(
            "cyclotomic literal {t:?} has order {n}, file kind is cyclo:{order}"
        )));
    }
    let rest = &tail[digits.len()..];
    let value = if let Some(exp) = rest.strip_prefix('^') {
        let e: u32 = exp
            .parse()
            .map_err(|_| CliError::usage(format!("bad exponent in literal: {t:?}")))?;
        Scalar::cyclotomic_root(order, e)
    } else if let Some(inner) = rest.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
        let coeffs: Vec<i64> = inner
            .split_whitespace()
            .map(|c| {
                c.parse::<i64>()
                    .map_err(|_| CliError::usage(format!("bad coefficient in literal: {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        if coeffs.len() > order as usize {
            return Err(CliError::usage(format!(
                "cyclotomic literal {t:?} has more than {order} coefficients"
            )));
        }
        Scalar::cyclotomic(order, &coeffs)
    } else {
        return Err(CliError::usage(format!("bad cyclotomic literal: {t:?}")));
    };
    Ok(if negate { value.neg() } else { value })
}

/// Split `a+bu`-shaped literals at the sign of the unit term. Returns the
/// real text and the unit-coefficient text (empty or "-" meaning 1 / -1).
fn split_unit(t: &str, unit: char) -> Result<(Option<&str>, Option<&str>), CliError> {
    match t.strip_suffix(unit) {
        None => Ok((Some(t), None)),
        Some(head) => {
            // find the split '+'/'-' (not leading, not an exponent sign)
            let bytes = head.as_bytes();
            let mut split = None;
            for idx in (1..bytes.len()).rev() {
                let c = bytes[idx] as char;
                if c == '+' || c == '-' {
                    let prev = bytes[idx - 1] as char;
                    if prev != 'e' && prev != 'E' {
                        split = Some(idx);
                        break;
                    }
                }
            }
            match split {
                Some(idx) => Ok((Some(&head[..idx]), Some(&head[idx..]))),
                None => Ok((None, Some(head))),
            }
        }
    }
}

fn parse_int_pair(t: &str, unit: char) -> Result<(i64, i64), CliError> {
    let bad = || CliError::usage(format!("bad integer literal: {t:?}"));
    let (real, coeff) = split_unit(t, unit)?;
    let a = match real {
        None => 0,
        Some(r) => r.parse::<i64>().map_err(|_| bad())?,
    };
    let b = match coeff {
        None => 0,
        Some("") | Some("+") => 1,
        Some("-") => -1,
        Some(c) => c.parse::<i64>().map_err(|_| bad())?,
    };
    Ok((a, b))
}

fn parse_float_pair(t: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::usage(format!("bad float literal: {t:?}"));
    let (real, coeff) = split_unit(t, 'j')?;
    let re = match real {
        None => 0.0,
        Some(r) => r.parse::<f64>().map_err(|_| bad())?,
    };
    let im = match coeff {
        None => 0.0,
        Some("") | Some("+") => 1.0,
        Some("-") => -1.0,
        Some(c) => c.parse::<f64>().map_err(|_| bad())?,
    };
    Ok((re, im))
}
