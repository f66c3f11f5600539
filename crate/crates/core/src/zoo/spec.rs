use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};

/// A named group family with parameters, e.g. `psl:2,7` or `sym:5*cyclic:3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Sym(u64),
    Alt(u64),
    Cyclic(u64),
    /// Dihedral group of the given order.
    Dihedral(u64),
    /// Dicyclic group of the given order (a multiple of 4); `dicyclic:8` is Q_8.
    Dicyclic(u64),
    Psl(u64, u64),
    Sl(u64, u64),
    Gl(u64, u64),
    Product(Vec<GroupSpec>),
}

impl GroupSpec {
    /// Order predicted by the closed formula for the family.
    pub fn expected_order(&self) -> u128 {
        use GroupSpec::*;
        match *self {
            Sym(n) => (1..=n as u128).product(),
            Alt(n) => {
                let f: u128 = (1..=n as u128).product();
                if n >= 2 { f / 2 } else { 1 }
            }
            Cyclic(n) | Dihedral(n) | Dicyclic(n) => n as u128,
            Psl(_, q) => {
                let q = q as u128;
                q * (q * q - 1) / arith::gcd(2, q as u64 - 1) as u128
            }
            Sl(_, q) => {
                let q = q as u128;
                q * (q * q - 1)
            }
            Gl(n, q) => {
                let q = q as u128;
                let qn = q.pow(n as u32);
                (0..n as u32).map(|i| qn - q.pow(i)).product()
            }
            Product(ref parts) => parts.iter().map(|s| s.expected_order()).product(),
        }
    }

    fn validate(&self, text: &str) -> Result<()> {
        use GroupSpec::*;
        let bad = |m: &str| Err(Error::Spec(text.to_string(), m.to_string()));
        match *self {
            Sym(n) | Alt(n) | Cyclic(n) if n == 0 => bad("degree must be at least 1"),
            Dihedral(n) if n < 2 || n % 2 != 0 => bad("dihedral order must be even and at least 2"),
            Dicyclic(n) if n < 4 || n % 4 != 0 => bad("dicyclic order must be a multiple of 4"),
            Psl(n, q) | Sl(n, q) => {
                if n != 2 {
                    return bad("only n = 2 is supported");
                }
                if arith::prime_power(q).is_none() {
                    return Err(Error::NotPrimePower(q));
                }
                if q > super::field::MAX_FIELD {
                    return bad("q must be at most 81");
                }
                Ok(())
            }
            Gl(n, q) => {
                if arith::prime_power(q).is_none() {
                    return Err(Error::NotPrimePower(q));
                }
                if !(1..=3).contains(&n) || q > 9 {
                    return bad("gl supports n <= 3 and q <= 9");
                }
                Ok(())
            }
            Product(ref parts) if parts.len() < 2 => bad("product needs two factors"),
            _ => Ok(()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.contains('*') {
            let parts = text.split('*').map(|s| s.parse()).collect::<Result<Vec<GroupSpec>>>()?;
            let spec = GroupSpec::Product(parts);
            spec.validate(text)?;
            return Ok(spec);
        }
        let err = |m: &str| Error::Spec(text.to_string(), m.to_string());
        let (family, args) = text.split_once(':').ok_or_else(|| err("expected family:params"))?;
        let nums = args
            .split(',')
            .map(|a| a.trim().parse::<u64>().map_err(|_| err("parameters must be integers")))
            .collect::<Result<Vec<u64>>>()?;
        let one = |f: fn(u64) -> GroupSpec| match nums.as_slice() {
            [n] => Ok(f(*n)),
            _ => Err(err("expected one parameter")),
        };
        let two = |f: fn(u64, u64) -> GroupSpec| match nums.as_slice() {
            [n, q] => Ok(f(*n, *q)),
            _ => Err(err("expected two parameters")),
        };
        let spec = match family.trim() {
            "sym" => one(GroupSpec::Sym)?,
            "alt" => one(GroupSpec::Alt)?,
            "cyclic" => one(GroupSpec::Cyclic)?,
            "dihedral" => one(GroupSpec::Dihedral)?,
            "dicyclic" => one(GroupSpec::Dicyclic)?,
            "psl" => two(GroupSpec::Psl)?,
            "sl" => two(GroupSpec::Sl)?,
            "gl" => two(GroupSpec::Gl)?,
            other => return Err(err(&format!("unknown family `{other}`"))),
        };
        spec.validate(text)?;
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            Sym(n) => write!(f, "sym:{n}"),
            Alt(n) => write!(f, "alt:{n}"),
            Cyclic(n) => write!(f, "cyclic:{n}"),
            Dihedral(n) => write!(f, "dihedral:{n}"),
            Dicyclic(n) => write!(f, "dicyclic:{n}"),
            Psl(n, q) => write!(f, "psl:{n},{q}"),
            Sl(n, q) => write!(f, "sl:{n},{q}"),
            Gl(n, q) => write!(f, "gl:{n},{q}"),
            Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}
