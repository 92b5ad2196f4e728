//! Serre weights, characters of the finite torus, and genericity windows.
//!
//! A Serre weight is written `(r_0, ..., r_{f-1}) ⊗ det^m` with
//! `0 <= r_i <= p - 1` and `0 <= m < q - 1`. A character of the finite torus
//! `H` is stored as the exponent pair `(c1, c2)` of
//! `diag(a, d) ↦ a^c1 d^c2`, both reduced into `[0, q - 1)`. The weight
//! `(r_i) ⊗ det^m` has invariants on which the torus acts by
//! `(Σ r_i p^i + m, m)`.
//!
//! The inertial shapes are keyed by matrix shape: [`InertialKind::ReducibleSplit`]
//! uses the niveau-`f` (upper-triangular `ω_f`) bounds and
//! [`InertialKind::Irreducible`] the niveau-`2f` (diagonal `ω_{2f}`) bounds.
//! Some sources print these two labels the other way round; the bounds here
//! follow the shape.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// The arithmetic context: an odd prime `p`, the inertial degree `f`, and `q = p^f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Params {
    p: u64,
    f: usize,
    q: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Params {
    /// Validates `p` and `f` and computes `q = p^f` with checked arithmetic.
    pub fn new(p: i64, f: i64) -> Result<Self> {
        if p < 2 || !is_prime(p as u64) {
            return Err(Error::validation("p", "p not prime"));
        }
        if p == 2 {
            return Err(Error::validation("p", "p must be odd"));
        }
        if f <= 0 {
            return Err(Error::validation("f", "f must be positive"));
        }
        let fu = u32::try_from(f).map_err(|_| Error::validation("f", "f too large"))?;
        // Intermediate sums reach a few multiples of p*q; keep q well inside i64.
        let q = (p as u64)
            .checked_pow(fu)
            .filter(|q| *q <= (i64::MAX as u64) / 64)
            .ok_or_else(|| Error::validation("f", format!("q = {p}^{f} overflows")))?;
        Ok(Params {
            p: p as u64,
            f: f as usize,
            q,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The order `q - 1` of the finite torus characters' exponent group.
    pub fn modulus(&self) -> u64 {
        self.q - 1
    }

    /// `p^i` for `0 <= i <= f`.
    pub fn p_pow(&self, i: usize) -> u64 {
        debug_assert!(i <= self.f);
        self.p.pow(i as u32)
    }

    /// Reduces a signed value into `[0, q - 1)`.
    pub fn reduce(&self, value: i128) -> u64 {
        value.rem_euclid(self.modulus() as i128) as u64
    }

    /// `Σ digits[i] p^i` as an exact integer.
    pub fn digit_value(&self, digits: &[u64]) -> u64 {
        digits
            .iter()
            .enumerate()
            .map(|(i, &d)| d * self.p_pow(i))
            .sum()
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.f {
            return Err(Error::LengthMismatch {
                expected: self.f,
                found: len,
            });
        }
        Ok(())
    }
}

/// `(r_0, ..., r_{f-1}) ⊗ det^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SerreWeight {
    digits: Vec<u64>,
    twist: u64,
}

impl SerreWeight {
    /// Builds a weight, rejecting digits outside `[0, p - 1]` and reducing the
    /// twist into `[0, q - 1)`.
    pub fn new(digits: &[i64], twist: i64, params: &Params) -> Result<Self> {
        params.check_len(digits.len())?;
        let max = params.p() - 1;
        let digits = digits
            .iter()
            .enumerate()
            .map(|(index, &d)| {
                if d < 0 || d as u64 > max {
                    Err(Error::DigitRange {
                        index,
                        value: d,
                        max,
                    })
                } else {
                    Ok(d as u64)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SerreWeight {
            digits,
            twist: params.reduce(twist as i128),
        })
    }

    pub(crate) fn from_parts_unchecked(digits: Vec<u64>, twist: u64) -> Self {
        SerreWeight { digits, twist }
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn twist(&self) -> u64 {
        self.twist
    }

    fn check(&self, params: &Params) -> Result<()> {
        params.check_len(self.digits.len())?;
        let max = params.p() - 1;
        if let Some((index, &d)) = self.digits.iter().enumerate().find(|(_, &d)| d > max) {
            return Err(Error::DigitRange {
                index,
                value: d as i64,
                max,
            });
        }
        if self.twist >= params.modulus() {
            return Err(Error::validation("twist", "not reduced modulo q - 1"));
        }
        Ok(())
    }
}

impl fmt::Display for SerreWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.digits.iter().map(u64::to_string).collect();
        write!(f, "({})⊗det^{}", digits.join(","), self.twist)
    }
}

/// The character `diag(a, d) ↦ a^a_exp d^d_exp` of the finite torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ToralCharacter {
    a_exp: u64,
    d_exp: u64,
}

impl ToralCharacter {
    pub fn new(a_exp: i128, d_exp: i128, params: &Params) -> Self {
        ToralCharacter {
            a_exp: params.reduce(a_exp),
            d_exp: params.reduce(d_exp),
        }
    }

    pub fn a_exp(&self) -> u64 {
        self.a_exp
    }

    pub fn d_exp(&self) -> u64 {
        self.d_exp
    }
}

/// The character by which the Iwahori subgroup acts on the `I_1`-invariants of `σ`.
pub fn char_of_weight(sigma: &SerreWeight, params: &Params) -> Result<ToralCharacter> {
    sigma.check(params)?;
    let value = params.digit_value(&sigma.digits) as i128;
    let m = sigma.twist as i128;
    Ok(ToralCharacter::new(value + m, m, params))
}

/// Conjugation by `Π = [[0, 1], [p, 0]]`, which swaps the diagonal entries.
pub fn conj_s(chi: ToralCharacter) -> ToralCharacter {
    ToralCharacter {
        a_exp: chi.d_exp,
        d_exp: chi.a_exp,
    }
}

/// `σ^{[s]}`: the unique weight different from `σ` whose invariants carry `χ^s`.
///
/// Closed form: digits `p - 1 - r_i`, twist `m + Σ r_i p^i`. Uniqueness needs
/// `σ` to be 1-generic; at the boundary `(0,...,0)` and `(p-1,...,p-1)` share
/// a character.
pub fn weight_s(sigma: &SerreWeight, params: &Params) -> Result<SerreWeight> {
    sigma.check(params)?;
    if !is_weight_generic(sigma, 1, params) {
        return Err(Error::Precondition(format!("{sigma} is not 1-generic")));
    }
    let p = params.p();
    let digits: Vec<u64> = sigma.digits.iter().map(|&r| p - 1 - r).collect();
    let twist = params.reduce(sigma.twist as i128 + params.digit_value(&sigma.digits) as i128);
    let result = SerreWeight { digits, twist };

    debug_assert_eq!(
        char_of_weight(&result, params).ok(),
        char_of_weight(sigma, params).ok().map(conj_s)
    );
    debug_assert_ne!(&result, sigma);
    #[cfg(debug_assertions)]
    if params.q() <= 100_000 {
        let target = conj_s(char_of_weight(sigma, params)?);
        let found: Vec<SerreWeight> = crate::oracle::weights_with_character(target, params)
            .into_iter()
            .filter(|w| w != sigma)
            .collect();
        debug_assert_eq!(found, vec![result.clone()]);
    }
    Ok(result)
}

/// `n <= r_i <= p - 2 - n` for every digit.
pub fn is_weight_generic(sigma: &SerreWeight, n: u64, params: &Params) -> bool {
    let upper = params.p() as i64 - 2 - n as i64;
    sigma
        .digits
        .iter()
        .all(|&r| n as i64 <= r as i64 && r as i64 <= upper)
}

/// Number of `n`-generic Serre weights: `(p - 1 - 2n)^f (q - 1)`, or zero when
/// the window is empty.
pub fn count_generic_weights(n: u64, params: &Params) -> u64 {
    let p = params.p();
    if p < 2 + 2 * n {
        return 0;
    }
    (p - 1 - 2 * n).pow(params.f() as u32) * params.modulus()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InertialKind {
    /// Niveau `f`: `ω_f^{Σ (r_j + 1) p^j} ⊕ 1` up to twist.
    ReducibleSplit,
    /// Niveau `2f`: `ω_{2f}^{Σ (r_j + 1) p^j} ⊕ ω_{2f}^{Σ (r_j + 1) p^{j+f}}` up to twist.
    Irreducible,
}

impl InertialKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            InertialKind::ReducibleSplit => "reducible-split",
            InertialKind::Irreducible => "irreducible",
        }
    }
}

impl FromStr for InertialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reducible-split" | "reducible" => Ok(InertialKind::ReducibleSplit),
            "irreducible" => Ok(InertialKind::Irreducible),
            other => Err(Error::validation(
                "kind",
                format!("expected reducible-split or irreducible, got `{other}`"),
            )),
        }
    }
}

/// The inertial parameters `(r_0, ..., r_{f-1})` of `ρ̄` together with its shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InertialData {
    digits: Vec<u64>,
    kind: InertialKind,
    /// Carried for completeness; none of the combinatorics depends on it.
    twist: u64,
}

impl InertialData {
    pub fn new(digits: &[i64], kind: InertialKind, twist: i64, params: &Params) -> Result<Self> {
        params.check_len(digits.len())?;
        let max = params.p() - 1;
        let digits = digits
            .iter()
            .enumerate()
            .map(|(index, &d)| {
                if d < 0 || d as u64 > max {
                    Err(Error::DigitRange {
                        index,
                        value: d,
                        max,
                    })
                } else {
                    Ok(d as u64)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(InertialData {
            digits,
            kind,
            twist: params.reduce(twist as i128),
        })
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn kind(&self) -> InertialKind {
        self.kind
    }

    pub fn twist(&self) -> u64 {
        self.twist
    }
}

/// `n`-genericity of inertial data, with bounds chosen by shape.
pub fn is_inertial_generic(rho: &InertialData, n: u64, params: &Params) -> bool {
    if rho.digits.len() != params.f() {
        return false;
    }
    let n = n as i64;
    let p = params.p() as i64;
    let r: Vec<i64> = rho.digits.iter().map(|&d| d as i64).collect();
    match rho.kind {
        InertialKind::ReducibleSplit => {
            let in_window = r.iter().all(|&d| n <= d && d <= p - 3 - n);
            let all_zero = r.iter().all(|&d| d == 0);
            let all_top = r.iter().all(|&d| d == p - 3);
            in_window && !all_zero && !all_top
        }
        InertialKind::Irreducible => {
            n + 1 <= r[0]
                && r[0] <= p - 2 - n
                && r[1..].iter().all(|&d| n <= d && d <= p - 3 - n)
        }
    }
}

/// The digit window on the restriction to inertia at the distinguished place
/// that the global finite-length statement asks for:
/// `max{12, 2f+1} < r_j < p - max{15, 2f+4}` in the niveau-`f` shape, and in
/// the niveau-`2f` shape `max{12, 2f+1} <= r_j <= p - max{15, 2f+4}` for
/// `j > 0` with `max{13, 2f+2} <= r_0 <= p - max{14, 2f+3}`.
pub fn in_global_window(rho: &InertialData, params: &Params) -> bool {
    if rho.digits.len() != params.f() {
        return false;
    }
    let f = params.f() as i64;
    let p = params.p() as i64;
    let low = 12.max(2 * f + 1);
    let high = p - 15.max(2 * f + 4);
    let r: Vec<i64> = rho.digits.iter().map(|&d| d as i64).collect();
    match rho.kind {
        InertialKind::ReducibleSplit => r.iter().all(|&d| low < d && d < high),
        InertialKind::Irreducible => {
            let low0 = 13.max(2 * f + 2);
            let high0 = p - 14.max(2 * f + 3);
            low0 <= r[0] && r[0] <= high0 && r[1..].iter().all(|&d| low <= d && d <= high)
        }
    }
}

/// Results whose genericity hypothesis is tabulated by [`required_genericity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Structure of the graded module attached to `ρ̄`.
    GradedStructure,
    /// Equality of the `(φ, Γ)`-module dimension with the socle length.
    SocleDimension,
    /// Generation of `π` by its `GL2(O_K)`-socle.
    SocleGeneration,
    /// Splitting off the principal series in the reducible split case.
    PrincipalSeriesSplitting,
    /// Cohen–Macaulayness of quotients by subrepresentations.
    QuotientCohenMacaulay,
    /// Length bounds `r (f + 1)` and `r`.
    LengthBound,
    /// Subrepresentations determined by their subspace profile.
    LatticeModel,
    /// Exactness of `m^n`-torsion along inclusions.
    TorsionExactness,
    /// Structure of the `m^2`-torsion.
    TorsionStructure,
    /// Exactness of `K_1`-invariants along inclusions.
    K1Exactness,
    /// Socle, dimension and generation statements for subquotients.
    SubquotientProperties,
    /// Supersingularity and length counts of the middle constituent.
    ConstituentCounting,
    /// Finite length of the global representation.
    GlobalFiniteLength,
    /// The four local hypotheses for the global subquotients.
    GlobalHypotheses,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::GradedStructure,
        TheoremId::SocleDimension,
        TheoremId::SocleGeneration,
        TheoremId::PrincipalSeriesSplitting,
        TheoremId::QuotientCohenMacaulay,
        TheoremId::LengthBound,
        TheoremId::LatticeModel,
        TheoremId::TorsionExactness,
        TheoremId::TorsionStructure,
        TheoremId::K1Exactness,
        TheoremId::SubquotientProperties,
        TheoremId::ConstituentCounting,
        TheoremId::GlobalFiniteLength,
        TheoremId::GlobalHypotheses,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::GradedStructure => "graded-structure",
            TheoremId::SocleDimension => "socle-dimension",
            TheoremId::SocleGeneration => "socle-generation",
            TheoremId::PrincipalSeriesSplitting => "principal-series-splitting",
            TheoremId::QuotientCohenMacaulay => "quotient-cohen-macaulay",
            TheoremId::LengthBound => "length-bound",
            TheoremId::LatticeModel => "lattice-model",
            TheoremId::TorsionExactness => "torsion-exactness",
            TheoremId::TorsionStructure => "torsion-structure",
            TheoremId::K1Exactness => "k1-exactness",
            TheoremId::SubquotientProperties => "subquotient-properties",
            TheoremId::ConstituentCounting => "constituent-counting",
            TheoremId::GlobalFiniteLength => "global-finite-length",
            TheoremId::GlobalHypotheses => "global-hypotheses",
        }
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// The genericity level `n` such that `ρ̄` must be `n`-generic for the result to apply.
pub fn required_genericity(theorem: TheoremId, params: &Params) -> u64 {
    let f = params.f() as u64;
    match theorem {
        TheoremId::GradedStructure => 9,
        TheoremId::SocleDimension
        | TheoremId::SocleGeneration
        | TheoremId::PrincipalSeriesSplitting => 2 * f,
        TheoremId::QuotientCohenMacaulay
        | TheoremId::LengthBound
        | TheoremId::LatticeModel
        | TheoremId::TorsionExactness
        | TheoremId::TorsionStructure
        | TheoremId::K1Exactness
        | TheoremId::SubquotientProperties
        | TheoremId::ConstituentCounting => 9.max(2 * f + 1),
        TheoremId::GlobalFiniteLength => 12.max(2 * f + 1),
        TheoremId::GlobalHypotheses => 12,
    }
}
