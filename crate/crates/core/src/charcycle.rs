//! Multiplicities and characteristic cycles over
//! `R̄ = F[y_i, z_i | 0 <= i < f] / (y_i z_i)`.
//!
//! `R̄` has `2^f` minimal primes, each generated by one variable per index;
//! `p_0 = (z_0, ..., z_{f-1})`. Localizing at a minimal prime `q` inverts the
//! unselected variables, which forces every selected variable to vanish, so
//! `R̄_q` is the field `F(u_0, ..., u_{f-1})` in the unselected variables.
//! For a monomial ideal `I` the localization of `R̄/I` is therefore either
//! that field (when `I ⊆ q`) or zero, and the multiplicity is 1 or 0.
//!
//! Modules are presented as direct sums of cyclic pieces `R̄/I`, optionally
//! through the graded layers of a filtration; the characteristic cycle is
//! the sum of the multiplicities over all pieces.

use std::collections::BTreeMap;
use std::fmt;

use crate::lattice::{soc_length, SubrepProfile};
use crate::tuples::{enumerate_d, length, AffineTuple};
use crate::weights::{InertialKind, Params};
use crate::{Error, Result};

/// A monomial `Π y_i^{a_i} z_i^{b_i}` of `R̄` that is nonzero: no index carries
/// both `y_i` and `z_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    y: Vec<u32>,
    z: Vec<u32>,
}

impl Monomial {
    pub fn new(y: Vec<u32>, z: Vec<u32>) -> Result<Self> {
        if y.len() != z.len() {
            return Err(Error::LengthMismatch {
                expected: y.len(),
                found: z.len(),
            });
        }
        if let Some(i) = (0..y.len()).find(|&i| y[i] > 0 && z[i] > 0) {
            return Err(Error::validation(
                "monomial",
                format!("y{i} z{i} vanishes in the quotient ring"),
            ));
        }
        Ok(Monomial { y, z })
    }

    pub fn one(f: usize) -> Self {
        Monomial {
            y: vec![0; f],
            z: vec![0; f],
        }
    }

    pub fn f(&self) -> usize {
        self.y.len()
    }

    pub fn y_exps(&self) -> &[u32] {
        &self.y
    }

    pub fn z_exps(&self) -> &[u32] {
        &self.z
    }

    pub fn is_one(&self) -> bool {
        self.y.iter().chain(&self.z).all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.y.iter().chain(&self.z).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.y.iter().zip(&other.y).all(|(a, b)| a <= b)
            && self.z.iter().zip(&other.z).all(|(a, b)| a <= b)
    }

    /// Parses products like `y0*z1^2`; `1` is the unit monomial.
    pub fn parse(text: &str, f: usize) -> Result<Self> {
        let bad = |why: &str| Error::validation("monomial", format!("`{text}`: {why}"));
        let mut y = vec![0; f];
        let mut z = vec![0; f];
        let text = text.trim();
        if text == "1" {
            return Ok(Monomial { y, z });
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                None => (factor, 1),
            };
            let (target, index) = if let Some(i) = var.strip_prefix('y') {
                (&mut y, i)
            } else if let Some(i) = var.strip_prefix('z') {
                (&mut z, i)
            } else {
                return Err(bad("expected y<i> or z<i>"));
            };
            let index: usize = index.parse().map_err(|_| bad("bad index"))?;
            if index >= f {
                return Err(bad("index out of range"));
            }
            target[index] += exp;
        }
        Monomial::new(y, z)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        for (name, exps) in [("y", &self.y), ("z", &self.z)] {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("{name}{i}")),
                    _ => factors.push(format!("{name}{i}^{e}")),
                }
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// A monomial ideal kept as its minimal generating set, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal {
    f: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(f: usize, generators: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.f() != f) {
            return Err(Error::LengthMismatch {
                expected: f,
                found: g.f(),
            });
        }
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        Ok(MonomialIdeal {
            f,
            generators: minimal,
        })
    }

    pub fn zero(f: usize) -> Self {
        MonomialIdeal {
            f,
            generators: Vec::new(),
        }
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Comma-separated generators; an empty string or `0` is the zero ideal.
    pub fn parse(text: &str, f: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(MonomialIdeal::zero(f));
        }
        let gens = text
            .split(',')
            .map(|g| Monomial::parse(g, f))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(f, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(Monomial::to_string).collect();
        if gens.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", gens.join(", "))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Y,
    Z,
}

/// A minimal prime of `R̄`: one selected variable per index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinimalPrime {
    selection: Vec<Var>,
}

impl MinimalPrime {
    pub fn new(selection: Vec<Var>) -> Self {
        MinimalPrime { selection }
    }

    /// `p_0 = (z_0, ..., z_{f-1})`.
    pub fn p0(f: usize) -> Self {
        MinimalPrime {
            selection: vec![Var::Z; f],
        }
    }

    pub fn selection(&self) -> &[Var] {
        &self.selection
    }

    pub fn is_p0(&self) -> bool {
        self.selection.iter().all(|&v| v == Var::Z)
    }

    /// Whether a monomial lies in the prime, i.e. has a selected factor.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.selection.iter().enumerate().any(|(i, v)| match v {
            Var::Y => m.y[i] > 0,
            Var::Z => m.z[i] > 0,
        })
    }

    /// Parses `z,y` (one letter per index) or `z0,y1`.
    pub fn parse(text: &str, f: usize) -> Result<Self> {
        let selection = text
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                let tok = tok.trim();
                let (var, idx) = tok.split_at(tok.len().min(1));
                if !idx.is_empty() && idx != i.to_string() {
                    return Err(Error::validation("prime", format!("`{tok}` out of order")));
                }
                match var {
                    "y" => Ok(Var::Y),
                    "z" => Ok(Var::Z),
                    _ => Err(Error::validation("prime", format!("`{tok}` is not y or z"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if selection.len() != f {
            return Err(Error::LengthMismatch {
                expected: f,
                found: selection.len(),
            });
        }
        Ok(MinimalPrime { selection })
    }
}

impl fmt::Display for MinimalPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self
            .selection
            .iter()
            .enumerate()
            .map(|(i, v)| match v {
                Var::Y => format!("y{i}"),
                Var::Z => format!("z{i}"),
            })
            .collect();
        write!(f, "({})", vars.join(", "))
    }
}

/// All `2^f` minimal primes, ordered lexicographically with `y < z`, so `p_0` is last.
pub fn minimal_primes(params: &Params) -> Vec<MinimalPrime> {
    let f = params.f();
    (0u64..1 << f)
        .map(|mask| MinimalPrime {
            selection: (0..f)
                .map(|i| {
                    if (mask >> (f - 1 - i)) & 1 == 1 {
                        Var::Z
                    } else {
                        Var::Y
                    }
                })
                .collect(),
        })
        .collect()
}

/// `m_q(R̄/I)`: 1 when `I ⊆ q`, else 0.
pub fn mult_at_prime(ideal: &MonomialIdeal, prime: &MinimalPrime) -> Result<u64> {
    if ideal.is_unit() {
        return Err(Error::Precondition("the unit ideal gives the zero module".into()));
    }
    if ideal.f() != prime.selection.len() {
        return Err(Error::LengthMismatch {
            expected: ideal.f(),
            found: prime.selection.len(),
        });
    }
    Ok(u64::from(
        ideal.generators().iter().all(|g| prime.contains(g)),
    ))
}

/// One cyclic piece `(R̄/I)^{⊕k}`, with an optional opaque label (for example
/// a torus twist) that plays no role in multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub ideal: MonomialIdeal,
    pub multiplicity: u64,
    pub label: Option<String>,
}

impl Summand {
    pub fn new(ideal: MonomialIdeal, multiplicity: u64) -> Result<Self> {
        if multiplicity == 0 {
            return Err(Error::validation("multiplicity", "must be at least 1"));
        }
        Ok(Summand {
            ideal,
            multiplicity,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// A module given either directly as a sum of cyclic pieces, or through the
/// graded layers `J^i N / J^{i+1} N` of a filtration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleSpec {
    pub summands: Vec<Summand>,
    pub filtration: Option<Vec<ModuleSpec>>,
}

impl ModuleSpec {
    pub fn direct(summands: Vec<Summand>) -> Self {
        ModuleSpec {
            summands,
            filtration: None,
        }
    }

    pub fn filtered(layers: Vec<ModuleSpec>) -> Self {
        ModuleSpec {
            summands: Vec::new(),
            filtration: Some(layers),
        }
    }

    /// `N_1 ⊕ N_2` for unfiltered modules.
    pub fn direct_sum(&self, other: &ModuleSpec) -> ModuleSpec {
        let mut summands = self.summands.clone();
        summands.extend(other.summands.iter().cloned());
        ModuleSpec::direct(summands)
    }

    /// Sum of summand multiplicities, through all layers.
    pub fn total_multiplicity(&self) -> u64 {
        match &self.filtration {
            Some(layers) => layers.iter().map(ModuleSpec::total_multiplicity).sum(),
            None => self.summands.iter().map(|s| s.multiplicity).sum(),
        }
    }
}

/// A formal nonnegative combination `Σ m_q q` over the minimal primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleVector {
    coeffs: BTreeMap<MinimalPrime, u64>,
}

impl CycleVector {
    pub fn zero(params: &Params) -> Self {
        CycleVector {
            coeffs: minimal_primes(params).into_iter().map(|q| (q, 0)).collect(),
        }
    }

    pub fn coeff(&self, prime: &MinimalPrime) -> u64 {
        self.coeffs.get(prime).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &BTreeMap<MinimalPrime, u64> {
        &self.coeffs
    }

    pub fn set(&mut self, prime: MinimalPrime, value: u64) {
        self.coeffs.insert(prime, value);
    }

    fn check_same_primes(&self, other: &CycleVector) -> Result<()> {
        if self.coeffs.keys().ne(other.coeffs.keys()) {
            return Err(Error::AmbientMismatch("cycles over different prime sets".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycleVector) -> Result<CycleVector> {
        self.check_same_primes(other)?;
        Ok(CycleVector {
            coeffs: self
                .coeffs
                .iter()
                .map(|(q, &a)| (q.clone(), a + other.coeff(q)))
                .collect(),
        })
    }

    /// Pointwise difference; fails if any coefficient would become negative.
    pub fn sub(&self, other: &CycleVector) -> Result<CycleVector> {
        self.check_same_primes(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|(q, &a)| {
                a.checked_sub(other.coeff(q))
                    .map(|c| (q.clone(), c))
                    .ok_or_else(|| {
                        Error::Arithmetic(format!("negative coefficient at {q}"))
                    })
            })
            .collect::<Result<_>>()?;
        Ok(CycleVector { coeffs })
    }
}

impl fmt::Display for CycleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().map(|(q, c)| format!("{c}·{q}")).collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `Z(N) = Σ_q m_q(N) q`.
pub fn char_cycle(module: &ModuleSpec, params: &Params) -> Result<CycleVector> {
    let mut cycle = CycleVector::zero(params);
    if let Some(layers) = &module.filtration {
        for layer in layers {
            cycle = cycle.add(&char_cycle(layer, params)?)?;
        }
        return Ok(cycle);
    }
    let primes = minimal_primes(params);
    for summand in &module.summands {
        if summand.ideal.f() != params.f() {
            return Err(Error::LengthMismatch {
                expected: params.f(),
                found: summand.ideal.f(),
            });
        }
        for q in &primes {
            let m = mult_at_prime(&summand.ideal, q)?;
            let entry = cycle.coeffs.entry(q.clone()).or_insert(0);
            *entry += summand.multiplicity * m;
        }
    }
    Ok(cycle)
}

/// `m_{p_0}(R̄/a(λ))` for the ideals attached to tuples: 1 on the weight
/// family, 0 elsewhere.
pub fn p0_multiplicity_of_tuple(lambda: &AffineTuple, params: &Params) -> u64 {
    u64::from(enumerate_d(params).contains(lambda))
}

/// `m_{p_0}` of the graded dual of a subrepresentation, summed over the
/// tuples of each length: `Σ_ℓ dim V(ℓ) · Σ_{ℓ(λ) = ℓ} m_{p_0}(R̄/a(λ))`.
/// Agrees with the socle length of the profile.
pub fn profile_p0_multiplicity(profile: &SubrepProfile, params: &Params) -> Result<u64> {
    if profile.kind() != InertialKind::ReducibleSplit {
        return Err(Error::Precondition(
            "p0-multiplicity bookkeeping is tabulated for reducible split profiles".into(),
        ));
    }
    let mut per_length = vec![0u64; params.f() + 1];
    for lambda in enumerate_d(params) {
        per_length[length(&lambda, params)] += p0_multiplicity_of_tuple(&lambda, params);
    }
    let total = profile
        .dims()
        .iter()
        .zip(&per_length)
        .map(|(&d, &count)| d as u64 * count)
        .sum();
    debug_assert_eq!(total, soc_length(profile, params));
    Ok(total)
}
