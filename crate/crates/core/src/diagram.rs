//! Weight sets `W(ρ̄)` graded by length, Jordan–Hölder constituents of tame
//! principal series, and the numerical profile of a representation with
//! multiplicity `r`.

use std::collections::{BTreeMap, BTreeSet};

use crate::tuples::{enumerate_d, enumerate_p_ind, length, weight_of_tuple, AffineTuple};
use crate::weights::{
    char_of_weight, is_inertial_generic, is_weight_generic, InertialData, InertialKind, Params,
    SerreWeight,
};
use crate::{binomial, Error, Result};

/// `W(ρ̄)` for reducible split `ρ̄`: one weight per tuple of the weight family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSet {
    entries: BTreeMap<AffineTuple, SerreWeight>,
    by_length: Vec<Vec<AffineTuple>>,
}

impl WeightSet {
    pub fn entries(&self) -> &BTreeMap<AffineTuple, SerreWeight> {
        &self.entries
    }

    /// Tuples of length `ℓ`, for `0 <= ℓ <= f`.
    pub fn by_length(&self) -> &[Vec<AffineTuple>] {
        &self.by_length
    }

    pub fn weights(&self) -> impl Iterator<Item = &SerreWeight> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn length_of(&self, sigma: &SerreWeight) -> Option<usize> {
        self.by_length
            .iter()
            .position(|level| level.iter().any(|lam| &self.entries[lam] == sigma))
    }
}

pub fn serre_weights(rho: &InertialData, params: &Params) -> Result<WeightSet> {
    if rho.kind() != InertialKind::ReducibleSplit {
        return Err(Error::Precondition(
            "explicit weight lists are only available for reducible split ρ̄".into(),
        ));
    }
    if !is_inertial_generic(rho, 0, params) {
        return Err(Error::Precondition(format!(
            "inertial digits {:?} are not 0-generic",
            rho.digits()
        )));
    }
    let r: Vec<i64> = rho.digits().iter().map(|&d| d as i64).collect();
    let mut entries = BTreeMap::new();
    let mut by_length = vec![Vec::new(); params.f() + 1];
    for lambda in enumerate_d(params) {
        let sigma = weight_of_tuple(&lambda, &r, params)?;
        by_length[length(&lambda, params)].push(lambda.clone());
        entries.insert(lambda, sigma);
    }
    Ok(WeightSet { entries, by_length })
}

/// Constituents of `Ind_I^{GL2(O_K)} χ_{σ_0}`, sorted. The determinant twist of
/// `σ_0` is added to each `e(λ)`.
pub fn jh_principal_series(sigma0: &SerreWeight, params: &Params) -> Result<BTreeSet<SerreWeight>> {
    params.check_len(sigma0.digits().len())?;
    if !is_weight_generic(sigma0, 1, params) {
        return Err(Error::Precondition(format!("{sigma0} is not 1-generic")));
    }
    let r: Vec<i64> = sigma0.digits().iter().map(|&d| d as i64).collect();
    enumerate_p_ind(params)
        .iter()
        .map(|lambda| {
            let w = weight_of_tuple(lambda, &r, params)?;
            let twist = params.reduce(w.twist() as i128 + sigma0.twist() as i128);
            Ok(SerreWeight::from_parts_unchecked(w.digits().to_vec(), twist))
        })
        .collect()
}

/// Constituents of the principal series of `σ_0` that lie in `W`; `σ_0` must be
/// the weight of length zero.
pub fn jh_meets_weightset(
    sigma0: &SerreWeight,
    w: &WeightSet,
    params: &Params,
) -> Result<BTreeSet<SerreWeight>> {
    if w.length_of(sigma0) != Some(0) {
        return Err(Error::Precondition(format!(
            "{sigma0} is not the length-0 weight of the weight set"
        )));
    }
    let values: BTreeSet<&SerreWeight> = w.weights().collect();
    Ok(jh_principal_series(sigma0, params)?
        .into_iter()
        .filter(|tau| values.contains(tau))
        .collect())
}

/// Whether distinct weights of `W` have distinct torus characters.
pub fn char_injectivity_check(w: &WeightSet, params: &Params) -> bool {
    let mut seen = BTreeSet::new();
    w.weights().all(|sigma| match char_of_weight(sigma, params) {
        Ok(chi) => seen.insert(chi),
        Err(_) => false,
    })
}

/// The counts forced by the four standing hypotheses on a representation of
/// multiplicity `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisProfile {
    pub r: u64,
    pub f: usize,
    pub kind: InertialKind,
    /// `dim Ext^i_{I/Z_1}(χ, π) = C(2f, i) r` for an occurring character `χ`.
    pub ext_dims: Vec<u64>,
    /// Number of weights: `2^f` in either kind.
    pub weight_count: u64,
    /// Length of the `GL2(O_K)`-socle, `r 2^f`.
    pub socle_length: u64,
    /// `[π[m] : χ] = [π[m^3] : χ] = r` for every occurring `χ`.
    pub char_multiplicity: u64,
    /// `Σ_i dim Ext^i = 4^f r`.
    pub total_ext: u64,
}

impl HypothesisProfile {
    pub fn ext_dim(&self, i: usize) -> u64 {
        self.ext_dims.get(i).copied().unwrap_or(0)
    }
}

pub fn hypothesis_profile(r: i64, params: &Params, kind: InertialKind) -> Result<HypothesisProfile> {
    if r <= 0 {
        return Err(Error::validation("r", "multiplicity must be at least 1"));
    }
    let r = r as u64;
    let f = params.f();
    let ext_dims: Vec<u64> = (0..=2 * f as u64).map(|i| binomial(2 * f as u64, i) * r).collect();
    let weight_count = 1u64 << f;
    Ok(HypothesisProfile {
        r,
        f,
        kind,
        total_ext: ext_dims.iter().sum(),
        ext_dims,
        weight_count,
        socle_length: r * weight_count,
        char_multiplicity: r,
    })
}
