//! Permutation groups given by generators, enumerated element by element.

mod bsgs;
mod classes;
mod group;
mod permutation;
mod quotient;
mod subgroup;

pub use bsgs::Bsgs;
pub use classes::ConjugacyClasses;
pub use group::{FiniteGroup, ELEMENT_LIMIT};
pub use permutation::Permutation;
pub use quotient::Quotient;
pub use subgroup::{PartDecomposition, Subgroup};

use crate::error::{Error, Result};

/// Parse a group file: one generator per line in 1-based cycle notation,
/// `#` starts a comment line. The degree is the largest point mentioned
/// unless given explicitly.
pub fn parse_group_file(text: &str, degree: Option<usize>) -> Result<FiniteGroup> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let n = degree.unwrap_or_else(|| {
        lines.iter().filter_map(|(_, l)| Permutation::max_point(l)).max().unwrap_or(1)
    });
    let mut gens = Vec::new();
    for (line, l) in lines {
        let p = Permutation::parse(l, n).map_err(|e| Error::Parse { line, msg: e.to_string() })?;
        gens.push(p);
    }
    FiniteGroup::new(n, gens)
}
