//! Brute-force reference computations.
//!
//! These never share code paths with the constructions they check: tuple
//! families are filtered out of all `4^f` candidates with the defining
//! implications, weights are found by scanning digit vectors, and monomial
//! multiplicities are recomputed by saturation and by counting standard
//! monomials.

use std::collections::HashMap;

use crate::charcycle::{MinimalPrime, Monomial, MonomialIdeal, Var};
use crate::tuples::{AffineForm, AffineTuple};
use crate::weights::{Params, SerreWeight, ToralCharacter};
use crate::{binomial, Result};

/// Calls `visit` on every digit vector in `[0, p-1]^f`.
fn for_each_digits(params: &Params, mut visit: impl FnMut(&[u64])) {
    let f = params.f();
    let p = params.p();
    let mut digits = vec![0u64; f];
    loop {
        visit(&digits);
        let mut i = 0;
        loop {
            if i == f {
                return;
            }
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Horner evaluation of `Σ r_i p^i mod (q - 1)`.
fn digit_residue(digits: &[u64], params: &Params) -> u64 {
    let m = params.modulus();
    digits
        .iter()
        .rev()
        .fold(0u64, |acc, &d| (acc * params.p() + d) % m)
}

/// Every Serre weight on whose invariants the torus acts by `chi`, sorted.
///
/// The determinant twist of such a weight is forced to be `chi.d_exp()`, so
/// the scan runs over digit vectors only.
pub fn weights_with_character(chi: ToralCharacter, params: &Params) -> Vec<SerreWeight> {
    let m = params.modulus();
    let twist = chi.d_exp();
    let mut out = Vec::new();
    for_each_digits(params, |digits| {
        if (digit_residue(digits, params) + twist) % m == chi.a_exp() {
            out.push(SerreWeight::from_parts_unchecked(digits.to_vec(), twist));
        }
    });
    out.sort();
    out
}

/// A pair of distinct `n`-generic weights with equal characters, if any.
///
/// Scans all `n`-generic weights; meant for `q` up to a few thousand.
pub fn generic_character_collision(n: u64, params: &Params) -> Option<(SerreWeight, SerreWeight)> {
    let m = params.modulus();
    let lo = n;
    let hi = (params.p() as i64 - 2 - n as i64).max(-1);
    let mut seen: HashMap<(u64, u64), SerreWeight> = HashMap::new();
    let mut collision = None;
    for_each_digits(params, |digits| {
        if collision.is_some() || !digits.iter().all(|&d| d >= lo && (d as i64) <= hi) {
            return;
        }
        let value = digit_residue(digits, params);
        for twist in 0..m {
            let key = ((value + twist) % m, twist);
            let w = SerreWeight::from_parts_unchecked(digits.to_vec(), twist);
            if let Some(prev) = seen.insert(key, w.clone()) {
                collision = Some((prev, w));
                return;
            }
        }
    });
    collision
}

/// Number of `n`-generic weights, by enumeration.
pub fn count_generic_weights(n: u64, params: &Params) -> u64 {
    let mut count = 0;
    for_each_digits(params, |digits| {
        if digits
            .iter()
            .all(|&d| d as i64 >= n as i64 && d as i64 <= params.p() as i64 - 2 - n as i64)
        {
            count += params.modulus();
        }
    });
    count
}

fn filter_candidates(
    f: usize,
    alphabet: [AffineForm; 4],
    first_class: [AffineForm; 2],
    after_first: [AffineForm; 2],
    after_second: [AffineForm; 2],
) -> Vec<AffineTuple> {
    let mut out = Vec::new();
    for code in 0u64..(1 << (2 * f)) {
        let forms: Vec<AffineForm> = (0..f)
            .map(|i| alphabet[((code >> (2 * i)) & 3) as usize])
            .collect();
        let ok = (0..f).all(|i| {
            let cur = forms[i];
            let next = forms[(i + 1) % f];
            if first_class.contains(&cur) {
                after_first.contains(&next)
            } else {
                after_second.contains(&next)
            }
        });
        if ok {
            out.push(AffineTuple::new(forms));
        }
    }
    out.sort();
    out
}

/// The weight family, filtered from all `4^f` candidates with
/// `{x, x+1} ⇒ next ∈ {x, p-2-x}` and `{p-2-x, p-3-x} ⇒ next ∈ {p-3-x, x+1}`.
pub fn brute_force_d(params: &Params) -> Vec<AffineTuple> {
    let p = params.p() as i64;
    let x = AffineForm::plus(0);
    let x1 = AffineForm::plus(1);
    let m2 = AffineForm::minus(p - 2);
    let m3 = AffineForm::minus(p - 3);
    filter_candidates(params.f(), [x, x1, m2, m3], [x, x1], [x, m2], [m3, x1])
}

/// The principal-series family, filtered from all `4^f` candidates with
/// `{x, x-1} ⇒ next ∈ {x, p-2-x}` and `{p-2-x, p-1-x} ⇒ next ∈ {p-1-x, x-1}`.
pub fn brute_force_p_ind(params: &Params) -> Vec<AffineTuple> {
    let p = params.p() as i64;
    let x = AffineForm::plus(0);
    let xm1 = AffineForm::plus(-1);
    let m2 = AffineForm::minus(p - 2);
    let m1 = AffineForm::minus(p - 1);
    filter_candidates(params.f(), [x, xm1, m2, m1], [x, xm1], [x, m2], [m1, xm1])
}

/// Multiplicity of `R̄/I` at `q` by saturation: in the localization every
/// generator with a selected factor dies, and every other generator becomes
/// a unit once the inverted factors are deleted.
pub fn mult_by_saturation(ideal: &MonomialIdeal, prime: &MinimalPrime) -> Result<u64> {
    let f = ideal.f();
    let mut localized = Vec::new();
    for g in ideal.generators() {
        let survives = prime.selection().iter().enumerate().all(|(i, v)| match v {
            Var::Y => g.y_exps()[i] == 0,
            Var::Z => g.z_exps()[i] == 0,
        });
        if survives {
            // only inverted variables remain; deleting them leaves 1
            localized.push(Monomial::one(f));
        }
    }
    let saturated = MonomialIdeal::new(f, localized)?;
    Ok(u64::from(!saturated.is_unit()))
}

/// Multiplicity of `R̄/I` at `q` by counting: the monomials outside `q` are
/// the monomials in the unselected variables; `R̄/I` is generically nonzero
/// on the component of `q` iff none of them of degree at most `D` lies in `I`,
/// for `D` the largest generator degree.
pub fn mult_by_standard_monomials(ideal: &MonomialIdeal, prime: &MinimalPrime) -> u64 {
    let f = ideal.f();
    let degree = ideal
        .generators()
        .iter()
        .map(Monomial::degree)
        .max()
        .unwrap_or(0);
    let mut standard = 0u64;
    let mut exps = vec![0u32; f];
    loop {
        if exps.iter().sum::<u32>() <= degree {
            let mut y = vec![0; f];
            let mut z = vec![0; f];
            for (i, v) in prime.selection().iter().enumerate() {
                match v {
                    Var::Y => z[i] = exps[i],
                    Var::Z => y[i] = exps[i],
                }
            }
            let m = Monomial::new(y, z).expect("one variable per index");
            if !ideal.contains(&m) {
                standard += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == f {
                let full = binomial(degree as u64 + f as u64, f as u64);
                return u64::from(standard == full);
            }
            exps[i] += 1;
            if exps[i] <= degree {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::char_of_weight;

    #[test]
    fn collision_at_boundary_only() {
        let p = Params::new(7, 1).unwrap();
        assert!(generic_character_collision(1, &p).is_none());
        assert!(generic_character_collision(0, &p).is_none());
        let chi = char_of_weight(&SerreWeight::new(&[0], 2, &p).unwrap(), &p).unwrap();
        let found: Vec<Vec<u64>> = weights_with_character(chi, &p)
            .iter()
            .map(|w| w.digits().to_vec())
            .collect();
        assert_eq!(found, vec![vec![0], vec![6]]);
    }

    #[test]
    fn standard_monomial_oracle_small() {
        let i = MonomialIdeal::parse("y0*z1", 2).unwrap();
        let q = MinimalPrime::parse("z,y", 2).unwrap();
        assert_eq!(mult_by_standard_monomials(&i, &q), 0);
        assert_eq!(mult_by_standard_monomials(&i, &MinimalPrime::p0(2)), 1);
        assert_eq!(mult_by_saturation(&i, &q).unwrap(), 0);
    }
}
