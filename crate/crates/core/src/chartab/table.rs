use num_traits::One;
use sha2::{Digest, Sha256};

use super::{dixon, ClassFunction, Cyclotomic};
use crate::error::{Error, Result};
use crate::perm::FiniteGroup;

pub const SERIAL_VERSION: &str = "CHARTAB v1";

/// The irreducible characters of a group in canonical order: the trivial
/// character first, then by degree, then lexicographically on the tuple of
/// serialized values.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    irreducibles: Vec<ClassFunction>,
    serialized: String,
    hash: String,
}

impl CharacterTable {
    /// Compute and verify the table.
    pub fn compute(g: &FiniteGroup) -> Result<Self> {
        let raw = dixon::irreducible_characters(g)?;
        let chars: Vec<ClassFunction> = raw.into_iter().map(|v| ClassFunction::new(g, v)).collect();
        Self::from_characters(g, chars)
    }

    /// Canonically order and verify a candidate list of irreducibles.
    pub fn from_characters(g: &FiniteGroup, mut chars: Vec<ClassFunction>) -> Result<Self> {
        let key = |c: &ClassFunction| {
            let trivial = c.values().iter().all(|v| v.is_rational() && v.to_i64() == Some(1));
            let degree = c.degree().to_i64().unwrap_or(i64::MAX);
            let ser: Vec<String> = c.values().iter().map(|v| v.serialize()).collect();
            (!trivial, degree, ser)
        };
        chars.sort_by_cached_key(key);
        verify(g, &chars)?;
        let serialized = serialize(g, &chars);
        let hash = hex::encode(Sha256::digest(serialized.as_bytes()));
        Ok(CharacterTable { irreducibles: chars, serialized, hash })
    }

    /// Rebuild from a canonical serialization, checking it against the group.
    pub fn parse(g: &FiniteGroup, text: &str) -> Result<Self> {
        let header = serialize_header(g);
        let rest = text
            .strip_prefix(&header)
            .ok_or_else(|| Error::Table("serialized header does not match the group".into()))?;
        let mut chars = Vec::new();
        for (i, line) in rest.lines().enumerate() {
            let prefix = format!("chi {}:", i + 1);
            let body = line
                .strip_prefix(&prefix)
                .ok_or_else(|| Error::Table(format!("expected `{prefix}`")))?;
            let values = body
                .split_whitespace()
                .map(Cyclotomic::parse)
                .collect::<Result<Vec<_>>>()?;
            if values.len() != g.num_classes() {
                return Err(Error::Table(format!("row {} has {} values", i + 1, values.len())));
            }
            chars.push(ClassFunction::new(g, values));
        }
        let table = Self::from_characters(g, chars)?;
        if table.serialized != text {
            return Err(Error::Table("serialization is not canonical".into()));
        }
        Ok(table)
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn chi(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irreducibles.iter().map(|c| c.degree().to_i64().unwrap()).collect()
    }

    pub fn serialized(&self) -> &str {
        &self.serialized
    }

    /// Hex SHA-256 of the canonical serialization.
    pub fn hash(&self) -> &str {
        &self.hash
    }

    /// Multiplicities `⟨α, χ_i⟩` in canonical character order.
    pub fn decompose(&self, g: &FiniteGroup, alpha: &ClassFunction) -> Vec<Cyclotomic> {
        self.irreducibles.iter().map(|chi| alpha.inner(chi, g)).collect()
    }

    /// Integer multiplicities, or an error if `alpha` is not a generalized character.
    pub fn decompose_int(&self, g: &FiniteGroup, alpha: &ClassFunction) -> Result<Vec<i64>> {
        self.decompose(g, alpha)
            .into_iter()
            .map(|v| v.to_i64().ok_or_else(|| Error::Internal(format!("non-integral multiplicity {v}"))))
            .collect()
    }

    pub fn combine(&self, g: &FiniteGroup, coeffs: &[i64]) -> ClassFunction {
        let mut acc = ClassFunction::zero(g);
        for (c, chi) in coeffs.iter().zip(&self.irreducibles) {
            if *c != 0 {
                acc = &acc + &chi.scale_int(*c);
            }
        }
        acc
    }

    /// Kernel of a character as the list of classes where it takes its degree.
    pub fn kernel_classes(&self, i: usize) -> Vec<usize> {
        let chi = &self.irreducibles[i];
        (0..chi.len()).filter(|&k| chi.value(k) == chi.degree()).collect()
    }

    /// Index of a character in the table.
    pub fn position(&self, chi: &ClassFunction) -> Option<usize> {
        self.irreducibles.iter().position(|c| c == chi)
    }

    /// Orbits of the Galois action `χ ↦ χ^(r)` over r coprime to the exponent.
    pub fn galois_orbits(&self, g: &FiniteGroup) -> Vec<Vec<usize>> {
        let e = g.exponent() as i64;
        let mut orbit_of = vec![usize::MAX; self.len()];
        let mut orbits = Vec::new();
        for i in 0..self.len() {
            if orbit_of[i] != usize::MAX {
                continue;
            }
            let mut orbit = vec![i];
            orbit_of[i] = orbits.len();
            for r in 2..e.max(2) {
                if crate::arith::gcd(r as u64, e as u64) != 1 {
                    continue;
                }
                let image = self.irreducibles[i].adams(g, r);
                let j = self.position(&image).expect("Galois conjugate of an irreducible is irreducible");
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = orbits.len();
                    orbit.push(j);
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }
}

fn serialize_header(g: &FiniteGroup) -> String {
    let cl = g.classes();
    let mut s = String::new();
    s.push_str(SERIAL_VERSION);
    s.push('\n');
    s.push_str(&format!("group: {}\n", g.label().unwrap_or("unnamed")));
    s.push_str(&format!("order: {}\n", g.order()));
    s.push_str(&format!("exponent: {}\n", g.exponent()));
    s.push_str(&format!("classes: {}\n", cl.len()));
    for k in 0..cl.len() {
        s.push_str(&format!(
            "class {}: order={} size={} centralizer={} rep={}\n",
            k + 1,
            cl.elem_order(k),
            cl.size(k),
            cl.centralizer_order(k),
            g.element(cl.rep(k))
        ));
    }
    s
}

fn serialize(g: &FiniteGroup, chars: &[ClassFunction]) -> String {
    let mut s = serialize_header(g);
    for (i, c) in chars.iter().enumerate() {
        let vals: Vec<String> = c.values().iter().map(|v| v.serialize()).collect();
        s.push_str(&format!("chi {}: {}\n", i + 1, vals.join(" ")));
    }
    s
}

/// Exact checks every table must pass: count, degree sum, both orthogonality relations.
fn verify(g: &FiniteGroup, chars: &[ClassFunction]) -> Result<()> {
    let cl = g.classes();
    let r = cl.len();
    if chars.len() != r {
        return Err(Error::Table(format!("{} characters for {r} classes", chars.len())));
    }
    if !chars.iter().all(|c| c.belongs_to(g)) {
        return Err(Error::GroupMismatch);
    }
    let mut degree_sq = 0u64;
    for c in chars {
        let d = c.degree().to_i64().filter(|&d| d > 0).ok_or_else(|| Error::Table("bad degree".into()))?;
        degree_sq += (d * d) as u64;
    }
    if degree_sq != g.order() {
        return Err(Error::Table(format!("degree squares sum to {degree_sq}")));
    }
    for (i, a) in chars.iter().enumerate() {
        if !a.values().iter().all(|v| v.is_algebraic_integer()) {
            return Err(Error::Table(format!("character {} has a non-integral value", i + 1)));
        }
        for (j, b) in chars.iter().enumerate().skip(i) {
            let ip = a.inner(b, g);
            let expect = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
            if ip != expect {
                return Err(Error::Table(format!("<chi_{}, chi_{}> = {ip}", i + 1, j + 1)));
            }
        }
    }
    for k in 0..r {
        for l in k..r {
            let mut s = Cyclotomic::zero();
            for c in chars {
                s += &(c.value(k) * &c.value(l).conj());
            }
            let expect = if k == l { Cyclotomic::from_int(cl.centralizer_order(k) as i64) } else { Cyclotomic::zero() };
            if s != expect {
                return Err(Error::Table(format!("column orthogonality fails at classes {} and {}", k + 1, l + 1)));
            }
        }
    }
    if !chars[0].values().iter().all(|v| v.to_rational().is_some_and(|x| x.is_one())) {
        return Err(Error::Table("first character is not trivial".into()));
    }
    Ok(())
}
