//! Text form of polynomials.
//!
//! Printing is in ascending degree with unit coefficients elided:
//! `-1+x+x^12+x^31`, `2*x^3-x^5`, and `0` for the zero polynomial. Parsing
//! accepts that form plus `2x^3`, upper-case `X`, whitespace, and the
//! class-B shorthand `B:n=12;m=31,44`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ClassBSpec, IntPoly};
use crate::{Error, Result};

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let a = c.abs();
            match (e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                (_, false) => write!(f, "{a}*")?,
            }
            match e {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with("B:") || t.starts_with("b:") {
            return Ok(t.parse::<ClassBSpec>()?.to_poly());
        }
        parse_sum(t)
    }
}

fn parse_sum(s: &str) -> Result<IntPoly> {
    let clean: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    if clean.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms: Vec<(usize, BigInt)> = Vec::new();
    let mut i = 0;
    while i < clean.len() {
        let mut neg = false;
        match clean[i] {
            b'+' => i += 1,
            b'-' => {
                neg = true;
                i += 1;
            }
            _ if i > 0 => return Err(Error::Parse(format!("expected + or - at offset {i}"))),
            _ => {}
        }
        let start = i;
        while i < clean.len() && clean[i] != b'+' && clean[i] != b'-' {
            i += 1;
        }
        let body = core::str::from_utf8(&clean[start..i]).expect("ascii subset");
        let (e, c) = parse_term(body)?;
        terms.push((e, if neg { -c } else { c }));
    }
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut coeffs = alloc::vec![BigInt::zero(); deg + 1];
    for (e, c) in terms {
        coeffs[e] += c;
    }
    Ok(IntPoly::new(coeffs))
}

fn parse_term(body: &str) -> Result<(usize, BigInt)> {
    let bad = || Error::Parse(format!("malformed term {body:?}"));
    if body.is_empty() {
        return Err(bad());
    }
    let Some(xpos) = body.find(['x', 'X']) else {
        return Ok((0, parse_digits(body).ok_or_else(bad)?));
    };
    let coeff_part = body[..xpos].strip_suffix('*').unwrap_or(&body[..xpos]);
    let coeff = if coeff_part.is_empty() {
        if xpos > 0 {
            return Err(bad());
        }
        BigInt::one()
    } else {
        parse_digits(coeff_part).ok_or_else(bad)?
    };
    let rest = &body[xpos + 1..];
    let e = if rest.is_empty() {
        1
    } else {
        let digits = rest.strip_prefix('^').ok_or_else(bad)?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        digits.parse::<usize>().map_err(|_| bad())?
    };
    Ok((e, coeff))
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl FromStr for ClassBSpec {
    type Err = Error;

    /// `B:n=12;m=31,44`, `B:n=12`, or a full polynomial of class-B shape.
    fn from_str(s: &str) -> Result<Self> {
        let t: alloc::string::String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_prefix("B:").or_else(|| t.strip_prefix("b:")) else {
            return ClassBSpec::from_poly(&parse_sum(&t)?);
        };
        let bad = || Error::Parse(format!("malformed class-B shorthand {s:?}"));
        let mut parts = body.split(';');
        let n = parts
            .next()
            .and_then(|p| p.strip_prefix("n="))
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(bad)?;
        let m = match parts.next() {
            None => Vec::new(),
            Some(p) => {
                let list = p.strip_prefix("m=").ok_or_else(bad)?;
                list.split(',')
                    .map(|v| v.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>>>()?
            }
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        ClassBSpec::new(n, m)
    }
}
