//! Text syntax for profiles, kinds and summands.

use modp_gl2::charcycle::{MonomialIdeal, Summand};
use modp_gl2::lattice::{Subspace, SubrepProfile};
use modp_gl2::weights::{InertialKind, Params};
use modp_gl2::{Error, Result};

pub fn kind(text: &str) -> Result<InertialKind> {
    text.parse()
}

/// One space: a dimension `k` (the first `k` coordinates) or a bracketed list
/// of vectors `[1 0 2;0 1 1]`.
fn space(text: &str, r: usize, field: u32) -> Result<Subspace> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
        let vectors = inner
            .split(';')
            .filter(|row| !row.trim().is_empty())
            .map(|row| {
                row.split_whitespace()
                    .map(|x| {
                        x.parse::<u32>()
                            .map_err(|_| Error::validation("profile", format!("bad entry {x:?}")))
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        return Subspace::span(field, r, &vectors);
    }
    let k: usize = text
        .parse()
        .map_err(|_| Error::validation("profile", format!("bad space {text:?}")))?;
    Subspace::coordinate(field, r, k)
}

/// Spaces separated by `/`. One space means an irreducible profile, `f + 1`
/// spaces a reducible split one.
pub fn profile(text: &str, r: usize, field: u32, params: &Params) -> Result<SubrepProfile> {
    let spaces = text
        .split('/')
        .map(|s| space(s, r, field))
        .collect::<Result<Vec<_>>>()?;
    let kind = if spaces.len() == 1 {
        InertialKind::Irreducible
    } else {
        InertialKind::ReducibleSplit
    };
    SubrepProfile::new(kind, spaces, params)
}

/// `IDEAL[:MULTIPLICITY]`, multiplicity 1 by default.
pub fn summand(text: &str, f: usize) -> Result<Summand> {
    let (ideal, mult) = match text.rsplit_once(':') {
        Some((ideal, mult)) => {
            let mult = mult
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::validation("summand", format!("bad multiplicity {mult:?}")))?;
            (ideal, mult)
        }
        None => (text, 1),
    };
    Summand::new(MonomialIdeal::parse(ideal, f)?, mult)
}
