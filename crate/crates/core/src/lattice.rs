//! Subspace-tuple model of the subrepresentation lattice.
//!
//! A subrepresentation of `π` with multiplicity `r` is determined by subspaces
//! of `F^r`: one per length `0 <= ℓ <= f` in the reducible split case, a single
//! one in the irreducible case. Everything here is exact linear algebra over a
//! small prime field `F_c`, with `c` unrelated to the weight prime `p`; only
//! dimensions and inclusions matter.

use std::collections::BTreeSet;

use rand::Rng;

use crate::weights::{InertialKind, Params};
use crate::{binomial, Error, Result};

fn is_small_prime(c: u32) -> bool {
    c >= 2 && (2..c).take_while(|d| d * d <= c).all(|d| c % d != 0)
}

fn inv_mod(a: u32, c: u32) -> u32 {
    // c is prime, so a^(c-2) inverts a
    let (mut base, mut exp, mut acc) = (a as u64 % c as u64, c as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % c as u64;
        }
        base = base * base % c as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Reduced row-echelon form of `rows` over `F_c`, zero rows dropped.
fn rref(mut rows: Vec<Vec<u32>>, c: u32) -> Vec<Vec<u32>> {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivot_row = 0;
    for col in 0..width {
        let Some(found) = (pivot_row..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = inv_mod(rows[pivot_row][col], c);
        for x in rows[pivot_row].iter_mut() {
            *x = (*x as u64 * inv as u64 % c as u64) as u32;
        }
        let pivot = rows[pivot_row].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pivot_row || row[col] == 0 {
                continue;
            }
            let factor = row[col] as u64;
            for (x, &y) in row.iter_mut().zip(&pivot) {
                *x = ((*x as u64 + (c as u64 - factor) * y as u64) % c as u64) as u32;
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.truncate(pivot_row);
    rows.retain(|row| row.iter().any(|&x| x != 0));
    rows
}

/// A subspace of `F_c^r`, stored by its reduced row-echelon basis.
///
/// Two subspaces are equal exactly when their canonical bases coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: u32,
    ambient: usize,
    basis: Vec<Vec<u32>>,
}

impl Subspace {
    fn check_field(field: u32) -> Result<()> {
        if !is_small_prime(field) || field > 251 {
            return Err(Error::validation("c", format!("{field} is not a prime below 256")));
        }
        Ok(())
    }

    /// The span of `vectors` in `F_c^ambient`.
    pub fn span(field: u32, ambient: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        Self::check_field(field)?;
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::LengthMismatch {
                    expected: ambient,
                    found: v.len(),
                });
            }
            if let Some(&x) = v.iter().find(|&&x| x >= field) {
                return Err(Error::validation("vector", format!("entry {x} is not reduced mod {field}")));
            }
        }
        Ok(Subspace {
            field,
            ambient,
            basis: rref(vectors.to_vec(), field),
        })
    }

    pub fn zero(field: u32, ambient: usize) -> Result<Self> {
        Self::span(field, ambient, &[])
    }

    pub fn full(field: u32, ambient: usize) -> Result<Self> {
        Self::coordinate(field, ambient, ambient)
    }

    /// The span of the first `k` standard basis vectors.
    pub fn coordinate(field: u32, ambient: usize, k: usize) -> Result<Self> {
        if k > ambient {
            return Err(Error::validation(
                "dimension",
                format!("{k} exceeds ambient dimension {ambient}"),
            ));
        }
        Self::span(field, ambient, &standard_vectors(ambient)[..k])
    }

    pub fn field(&self) -> u32 {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field || self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(format!(
                "F_{}^{} vs F_{}^{}",
                self.field, self.ambient, other.field, other.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rref(rows, self.field).len() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.field == other.field
            && self.ambient == other.ambient
            && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let rows: Vec<Vec<u32>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace {
            field: self.field,
            ambient: self.ambient,
            basis: rref(rows, self.field),
        })
    }

    /// Intersection by the Zassenhaus algorithm.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for a in &self.basis {
            rows.push(a.iter().chain(a).copied().collect::<Vec<u32>>());
        }
        for b in &other.basis {
            rows.push(b.iter().copied().chain(std::iter::repeat(0).take(n)).collect());
        }
        let meet: Vec<Vec<u32>> = rref(rows, self.field)
            .into_iter()
            .filter(|row| row[..n].iter().all(|&x| x == 0))
            .map(|row| row[n..].to_vec())
            .collect();
        Subspace::span(self.field, n, &meet)
    }

    /// A complement of `self` inside `sup`: the basis of `self` is extended by
    /// the rows of the canonical basis of `sup`, taken in order, and the added
    /// rows span the result.
    pub fn complement_in(&self, sup: &Subspace) -> Result<Subspace> {
        self.check_compatible(sup)?;
        if !self.is_subspace_of(sup) {
            return Err(Error::Containment { index: 0 });
        }
        let mut current = self.clone();
        let mut chosen = Vec::new();
        for v in &sup.basis {
            if !current.contains(v) {
                chosen.push(v.clone());
                current = current.sum(&Subspace::span(self.field, self.ambient, &[v.clone()])?)?;
            }
        }
        Subspace::span(self.field, self.ambient, &chosen)
    }

    /// Every vector of the subspace, `c^dim` of them.
    pub fn vectors(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0u32; self.ambient]];
        for b in &self.basis {
            let mut next = Vec::with_capacity(out.len() * self.field as usize);
            for v in &out {
                for k in 0..self.field {
                    next.push(
                        v.iter()
                            .zip(b)
                            .map(|(&x, &y)| (x + k * y) % self.field)
                            .collect(),
                    );
                }
            }
            out = next;
        }
        out
    }

    /// All subspaces `W` with `self <= W <= upper`.
    pub fn subspaces_up_to(&self, upper: &Subspace) -> Result<Vec<Subspace>> {
        self.check_compatible(upper)?;
        if !self.is_subspace_of(upper) {
            return Err(Error::Containment { index: 0 });
        }
        let vectors = upper.vectors();
        let mut seen: BTreeSet<Subspace> = BTreeSet::from([self.clone()]);
        let mut frontier = vec![self.clone()];
        while let Some(w) = frontier.pop() {
            for v in &vectors {
                if w.contains(v) {
                    continue;
                }
                let bigger = w.sum(&Subspace::span(self.field, self.ambient, &[v.clone()])?)?;
                if seen.insert(bigger.clone()) {
                    frontier.push(bigger);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

fn standard_vectors(n: usize) -> Vec<Vec<u32>> {
    (0..n)
        .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
        .collect()
}

/// `dim A`, `dim B`, `dim (A + B)`, `dim (A ∩ B)` with the canonical sum and
/// intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceAlgebra {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub dims: (usize, usize, usize, usize),
}

pub fn subspace_algebra(a: &Subspace, b: &Subspace) -> Result<SubspaceAlgebra> {
    let sum = a.sum(b)?;
    let intersection = a.intersection(b)?;
    let dims = (a.dim(), b.dim(), sum.dim(), intersection.dim());
    Ok(SubspaceAlgebra {
        sum,
        intersection,
        dims,
    })
}

/// The subspace profile of a subrepresentation: `f + 1` subspaces indexed by
/// length for reducible split `ρ̄`, a single subspace for irreducible `ρ̄`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubrepProfile {
    kind: InertialKind,
    spaces: Vec<Subspace>,
}

impl SubrepProfile {
    pub fn new(kind: InertialKind, spaces: Vec<Subspace>, params: &Params) -> Result<Self> {
        let expected = match kind {
            InertialKind::ReducibleSplit => params.f() + 1,
            InertialKind::Irreducible => 1,
        };
        if spaces.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: spaces.len(),
            });
        }
        for s in &spaces[1..] {
            spaces[0].check_compatible(s)?;
        }
        Ok(SubrepProfile { kind, spaces })
    }

    fn uniform(kind: InertialKind, space: Subspace, params: &Params) -> Result<Self> {
        let count = match kind {
            InertialKind::ReducibleSplit => params.f() + 1,
            InertialKind::Irreducible => 1,
        };
        Self::new(kind, vec![space; count], params)
    }

    /// Every space equal to `F_c^r`: the profile of `π` itself.
    pub fn full(kind: InertialKind, r: usize, field: u32, params: &Params) -> Result<Self> {
        Self::uniform(kind, Subspace::full(field, r)?, params)
    }

    pub fn zero(kind: InertialKind, r: usize, field: u32, params: &Params) -> Result<Self> {
        Self::uniform(kind, Subspace::zero(field, r)?, params)
    }

    /// Coordinate subspaces of the given dimensions.
    pub fn from_dims(
        kind: InertialKind,
        r: usize,
        field: u32,
        dims: &[usize],
        params: &Params,
    ) -> Result<Self> {
        let spaces = dims
            .iter()
            .map(|&d| Subspace::coordinate(field, r, d))
            .collect::<Result<Vec<_>>>()?;
        Self::new(kind, spaces, params)
    }

    pub fn kind(&self) -> InertialKind {
        self.kind
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// The multiplicity `r`, i.e. the common ambient dimension.
    pub fn rank(&self) -> usize {
        self.spaces[0].ambient()
    }

    pub fn field(&self) -> u32 {
        self.spaces[0].field()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    fn check_same_shape(&self, other: &SubrepProfile) -> Result<()> {
        if self.kind != other.kind || self.spaces.len() != other.spaces.len() {
            return Err(Error::AmbientMismatch("profiles of different shape".into()));
        }
        self.spaces[0].check_compatible(&other.spaces[0])
    }

    /// `Ok` when every space of `self` lies in the matching space of `other`,
    /// otherwise the first failing index.
    pub fn check_contained_in(&self, other: &SubrepProfile) -> Result<()> {
        self.check_same_shape(other)?;
        match self
            .spaces
            .iter()
            .zip(&other.spaces)
            .position(|(a, b)| !a.is_subspace_of(b))
        {
            Some(index) => Err(Error::Containment { index }),
            None => Ok(()),
        }
    }

    pub fn is_contained_in(&self, other: &SubrepProfile) -> bool {
        self.check_contained_in(other).is_ok()
    }

    fn with_space(&self, index: usize, space: Subspace) -> SubrepProfile {
        let mut spaces = self.spaces.clone();
        spaces[index] = space;
        SubrepProfile {
            kind: self.kind,
            spaces,
        }
    }
}

/// Length of the `GL2(O_K)`-socle: `Σ_ℓ dim V(ℓ) C(f, ℓ)` in the reducible
/// split case, `dim V · 2^f` otherwise.
pub fn soc_length(profile: &SubrepProfile, params: &Params) -> u64 {
    let f = params.f() as u64;
    match profile.kind {
        InertialKind::ReducibleSplit => profile
            .spaces
            .iter()
            .enumerate()
            .map(|(l, s)| s.dim() as u64 * binomial(f, l as u64))
            .sum(),
        InertialKind::Irreducible => profile.spaces[0].dim() as u64 * (1u64 << f),
    }
}

/// Dimension of the cyclotomic `(φ, Γ)`-module of the subrepresentation, which
/// equals its socle length.
pub fn xi_dimension(profile: &SubrepProfile, params: &Params) -> u64 {
    soc_length(profile, params)
}

/// Upper bound on the length of `π_2 / π_1`: `Σ_ℓ (dim V_2(ℓ) - dim V_1(ℓ))`.
pub fn length_bound(outer: &SubrepProfile, inner: &SubrepProfile, _params: &Params) -> Result<u64> {
    inner.check_contained_in(outer)?;
    Ok((outer.total_dim() - inner.total_dim()) as u64)
}

/// The profile of `π_2 / π_1`, with a fixed complement of each `V_1(ℓ)` in
/// `V_2(ℓ)` (see [`Subspace::complement_in`]).
pub fn quotient_profile(outer: &SubrepProfile, inner: &SubrepProfile) -> Result<SubrepProfile> {
    inner.check_contained_in(outer)?;
    let spaces = inner
        .spaces
        .iter()
        .zip(&outer.spaces)
        .map(|(a, b)| a.complement_in(b))
        .collect::<Result<Vec<_>>>()?;
    Ok(SubrepProfile {
        kind: outer.kind,
        spaces,
    })
}

/// Exactness of socles along `π_1 ⊆ π_2`, measured by length.
pub fn socle_additivity_check(
    inner: &SubrepProfile,
    outer: &SubrepProfile,
    params: &Params,
) -> Result<bool> {
    let quotient = quotient_profile(outer, inner)?;
    Ok(soc_length(inner, params) + soc_length(&quotient, params) == soc_length(outer, params))
}

/// Every profile between `lower` and `upper`, or `None` if there are more than `cap`.
pub fn profiles_between(
    lower: &SubrepProfile,
    upper: &SubrepProfile,
    cap: usize,
) -> Result<Option<Vec<SubrepProfile>>> {
    lower.check_contained_in(upper)?;
    let per_space = lower
        .spaces
        .iter()
        .zip(&upper.spaces)
        .map(|(a, b)| a.subspaces_up_to(b))
        .collect::<Result<Vec<_>>>()?;
    let total = per_space
        .iter()
        .try_fold(1usize, |acc, s| acc.checked_mul(s.len()));
    if total.map_or(true, |t| t > cap) {
        return Ok(None);
    }
    let mut out = vec![Vec::new()];
    for choices in &per_space {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Subspace>| {
                choices.iter().map(move |s| {
                    let mut next = prefix.clone();
                    next.push(s.clone());
                    next
                })
            })
            .collect();
    }
    Ok(Some(
        out.into_iter()
            .map(|spaces| SubrepProfile {
                kind: lower.kind,
                spaces,
            })
            .collect(),
    ))
}

/// Longest strictly increasing chain from `lower` to `upper`, by exhaustive
/// dynamic programming over all intermediate profiles. `None` when more than
/// `cap` profiles would be enumerated.
pub fn exhaustive_max_chain(
    lower: &SubrepProfile,
    upper: &SubrepProfile,
    cap: usize,
) -> Result<Option<usize>> {
    let Some(mut all) = profiles_between(lower, upper, cap)? else {
        return Ok(None);
    };
    // strict inclusion strictly raises total dimension, so this is a topological order
    all.sort_by_key(|prof| std::cmp::Reverse(prof.total_dim()));
    let mut longest = vec![0usize; all.len()];
    for i in 0..all.len() {
        longest[i] = (0..i)
            .filter(|&j| all[j] != all[i] && all[i].is_contained_in(&all[j]))
            .map(|j| longest[j] + 1)
            .max()
            .unwrap_or(0);
    }
    let start = all.iter().position(|prof| prof == lower).unwrap_or(0);
    Ok(Some(longest[start]))
}

/// A random strictly increasing chain from `lower` to `upper`. Each step
/// enlarges one or more spaces by one or more random vectors. Returns the
/// chain including both endpoints.
pub fn random_chain<R: Rng>(
    lower: &SubrepProfile,
    upper: &SubrepProfile,
    rng: &mut R,
) -> Result<Vec<SubrepProfile>> {
    lower.check_contained_in(upper)?;
    let field = lower.field();
    let ambient = lower.rank();
    let upper_vectors: Vec<Vec<Vec<u32>>> = upper.spaces.iter().map(Subspace::vectors).collect();
    let mut chain = vec![lower.clone()];
    let mut current = lower.clone();
    while current != *upper {
        let open: Vec<usize> = (0..current.spaces.len())
            .filter(|&i| current.spaces[i] != upper.spaces[i])
            .collect();
        let touches = rng.gen_range(1..=open.len().min(2));
        let mut next = current.clone();
        for _ in 0..touches {
            let i = open[rng.gen_range(0..open.len())];
            let adds = rng.gen_range(1..=2);
            for _ in 0..adds {
                let candidates: Vec<&Vec<u32>> = upper_vectors[i]
                    .iter()
                    .filter(|v| !next.spaces[i].contains(v))
                    .collect();
                if candidates.is_empty() {
                    break;
                }
                let v = candidates[rng.gen_range(0..candidates.len())].clone();
                let grown = next.spaces[i].sum(&Subspace::span(field, ambient, &[v])?)?;
                next = next.with_space(i, grown);
            }
        }
        chain.push(next.clone());
        current = next;
    }
    Ok(chain)
}

/// A chain from `lower` to `upper` that grows one space by one dimension per step.
pub fn saturated_chain(lower: &SubrepProfile, upper: &SubrepProfile) -> Result<Vec<SubrepProfile>> {
    lower.check_contained_in(upper)?;
    let mut chain = vec![lower.clone()];
    let mut current = lower.clone();
    for i in 0..upper.spaces.len() {
        for v in &upper.spaces[i].basis {
            if current.spaces[i].contains(v) {
                continue;
            }
            let grown = current.spaces[i]
                .sum(&Subspace::span(lower.field(), lower.rank(), &[v.clone()])?)?;
            current = current.with_space(i, grown);
            chain.push(current.clone());
        }
    }
    Ok(chain)
}

fn is_strict_chain(chain: &[SubrepProfile]) -> bool {
    chain
        .windows(2)
        .all(|w| w[0] != w[1] && w[0].is_contained_in(&w[1]))
}

/// Outcome of [`max_chain_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub bound: u64,
    /// Longest chain by exhaustive search, when small enough to enumerate.
    pub exhaustive_max: Option<usize>,
    /// Longest of the random chains.
    pub random_max: usize,
    /// Steps of the one-dimensional-increment chain.
    pub saturated_len: usize,
    pub passed: bool,
}

/// Profiles with at most this many intermediate profiles are searched exhaustively.
pub const EXHAUSTIVE_CAP: usize = 20_000;

/// Checks that no strict chain from `lower` to `upper` is longer than
/// [`length_bound`] and that a chain of exactly that length exists.
pub fn max_chain_check<R: Rng>(
    lower: &SubrepProfile,
    upper: &SubrepProfile,
    trials: usize,
    rng: &mut R,
    params: &Params,
) -> Result<ChainReport> {
    let bound = length_bound(upper, lower, params)?;
    let exhaustive_max = exhaustive_max_chain(lower, upper, EXHAUSTIVE_CAP)?;
    let mut random_max = 0;
    let mut passed = true;
    for _ in 0..trials {
        let chain = random_chain(lower, upper, rng)?;
        passed &= is_strict_chain(&chain);
        random_max = random_max.max(chain.len() - 1);
    }
    let saturated = saturated_chain(lower, upper)?;
    passed &= is_strict_chain(&saturated);
    let saturated_len = saturated.len() - 1;
    passed &= random_max as u64 <= bound && saturated_len as u64 == bound;
    if let Some(max) = exhaustive_max {
        passed &= max as u64 == bound;
    }
    Ok(ChainReport {
        bound,
        exhaustive_max,
        random_max,
        saturated_len,
        passed,
    })
}

/// A uniformly random spanning set of size up to `r`, reduced to a subspace.
pub fn random_subspace<R: Rng>(field: u32, ambient: usize, rng: &mut R) -> Result<Subspace> {
    let count = rng.gen_range(0..=ambient);
    let vectors: Vec<Vec<u32>> = (0..count)
        .map(|_| (0..ambient).map(|_| rng.gen_range(0..field)).collect())
        .collect();
    Subspace::span(field, ambient, &vectors)
}

/// A random subspace of `upper`.
pub fn random_subspace_of<R: Rng>(upper: &Subspace, rng: &mut R) -> Result<Subspace> {
    let count = rng.gen_range(0..=upper.dim());
    let vectors: Vec<Vec<u32>> = (0..count)
        .map(|_| {
            let mut v = vec![0u32; upper.ambient()];
            for b in upper.basis() {
                let k = rng.gen_range(0..upper.field());
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = (*x + k * y) % upper.field();
                }
            }
            v
        })
        .collect();
    Subspace::span(upper.field(), upper.ambient(), &vectors)
}

pub fn random_profile<R: Rng>(
    kind: InertialKind,
    r: usize,
    field: u32,
    params: &Params,
    rng: &mut R,
) -> Result<SubrepProfile> {
    let count = match kind {
        InertialKind::ReducibleSplit => params.f() + 1,
        InertialKind::Irreducible => 1,
    };
    let spaces = (0..count)
        .map(|_| random_subspace(field, r, rng))
        .collect::<Result<Vec<_>>>()?;
    SubrepProfile::new(kind, spaces, params)
}

/// A random pair `inner <= outer`.
pub fn random_nested_pair<R: Rng>(
    kind: InertialKind,
    r: usize,
    field: u32,
    params: &Params,
    rng: &mut R,
) -> Result<(SubrepProfile, SubrepProfile)> {
    let outer = random_profile(kind, r, field, params, rng)?;
    let spaces = outer
        .spaces
        .iter()
        .map(|s| random_subspace_of(s, rng))
        .collect::<Result<Vec<_>>>()?;
    Ok((SubrepProfile { kind, spaces }, outer))
}

/// Shape of `π = π_0^{⊕r} ⊕ π_f^{⊕r} ⊕ π'` in the reducible split case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsDecomposition {
    /// Copies of the principal series carried by the length-0 weight.
    pub low_multiplicity: usize,
    /// Copies of the principal series carried by the length-`f` weight.
    pub high_multiplicity: usize,
    /// Profile of `π'`: zero at `ℓ = 0` and `ℓ = f`, full in between.
    pub remainder: SubrepProfile,
    /// `r (f - 1)`.
    pub remainder_length_bound: u64,
    /// `r (2^f - 2)`.
    pub remainder_socle_length: u64,
}

pub fn ps_decomposition(full: &SubrepProfile, r: usize, params: &Params) -> Result<PsDecomposition> {
    if full.kind != InertialKind::ReducibleSplit {
        return Err(Error::Precondition(
            "the principal series only split off in the reducible split case".into(),
        ));
    }
    if full.rank() != r {
        return Err(Error::Precondition(format!(
            "profile has multiplicity {}, expected {r}",
            full.rank()
        )));
    }
    if full.spaces.iter().any(|s| s.dim() != r) {
        return Err(Error::Precondition("profile is not full".into()));
    }
    let f = params.f();
    let zero = Subspace::zero(full.field(), r)?;
    let remainder = full.with_space(0, zero.clone()).with_space(f, zero);
    let empty = SubrepProfile::zero(InertialKind::ReducibleSplit, r, full.field(), params)?;
    Ok(PsDecomposition {
        low_multiplicity: full.spaces[0].dim(),
        high_multiplicity: full.spaces[f].dim(),
        remainder_length_bound: length_bound(&remainder, &empty, params)?,
        remainder_socle_length: soc_length(&remainder, params),
        remainder,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const RED: InertialKind = InertialKind::ReducibleSplit;
    const IRR: InertialKind = InertialKind::Irreducible;

    fn params(f: i64) -> Params {
        Params::new(29, f).unwrap()
    }

    fn span(c: u32, n: usize, rows: &[&[u32]]) -> Subspace {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        Subspace::span(c, n, &rows).unwrap()
    }

    #[test]
    fn rref_canonical() {
        let a = span(3, 3, &[&[2, 1, 0], &[1, 1, 1]]);
        let b = span(3, 3, &[&[1, 1, 1], &[2, 1, 0], &[0, 0, 0]]);
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[vec![1, 0, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn algebra_examples() {
        let a = span(3, 4, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let b = span(3, 4, &[&[0, 0, 1, 1], &[1, 1, 0, 2]]);
        let alg = subspace_algebra(&a, &b).unwrap();
        assert_eq!(alg.dims, (2, 2, 4, 0));
        assert!(alg.intersection.is_zero());

        let same = subspace_algebra(&a, &a).unwrap();
        assert_eq!(same.sum, a);
        assert_eq!(same.intersection, a);

        let z = Subspace::zero(3, 4).unwrap();
        let with_zero = subspace_algebra(&z, &b).unwrap();
        assert_eq!(with_zero.sum, b);
        assert!(with_zero.intersection.is_zero());

        let c = span(3, 4, &[&[1, 1, 0, 0], &[0, 0, 1, 0]]);
        let alg = subspace_algebra(&a, &c).unwrap();
        assert_eq!(alg.dims, (2, 2, 3, 1));
        assert_eq!(alg.intersection, span(3, 4, &[&[1, 1, 0, 0]]));

        assert!(matches!(
            subspace_algebra(&a, &Subspace::zero(3, 3).unwrap()),
            Err(Error::AmbientMismatch(_))
        ));
        assert!(Subspace::zero(4, 2).is_err());
    }

    #[test]
    fn soc_length_examples() {
        let p2 = params(2);
        assert_eq!(soc_length(&SubrepProfile::full(RED, 3, 3, &p2).unwrap(), &p2), 12);
        assert_eq!(soc_length(&SubrepProfile::zero(RED, 3, 3, &p2).unwrap(), &p2), 0);
        let p3 = params(3);
        let irr = SubrepProfile::from_dims(IRR, 3, 3, &[2], &p3).unwrap();
        assert_eq!(soc_length(&irr, &p3), 16);
        assert_eq!(xi_dimension(&irr, &p3), 16);
    }

    #[test]
    fn length_bound_examples() {
        let p2 = params(2);
        let full = SubrepProfile::full(RED, 3, 3, &p2).unwrap();
        let zero = SubrepProfile::zero(RED, 3, 3, &p2).unwrap();
        assert_eq!(length_bound(&full, &zero, &p2).unwrap(), 9);
        assert_eq!(length_bound(&full, &full, &p2).unwrap(), 0);
        let full = SubrepProfile::full(IRR, 3, 3, &p2).unwrap();
        let zero = SubrepProfile::zero(IRR, 3, 3, &p2).unwrap();
        assert_eq!(length_bound(&full, &zero, &p2).unwrap(), 3);
    }

    #[test]
    fn length_bound_names_failing_component() {
        let p2 = params(2);
        let outer = SubrepProfile::from_dims(RED, 3, 3, &[3, 1, 3], &p2).unwrap();
        let inner = SubrepProfile::from_dims(RED, 3, 3, &[1, 2, 0], &p2).unwrap();
        assert_eq!(
            length_bound(&outer, &inner, &p2).unwrap_err(),
            Error::Containment { index: 1 }
        );
    }

    #[test]
    fn quotient_examples() {
        let p2 = params(2);
        let outer = SubrepProfile::from_dims(RED, 3, 3, &[3, 3, 3], &p2).unwrap();
        let inner = SubrepProfile::from_dims(RED, 3, 3, &[1, 2, 0], &p2).unwrap();
        let q = quotient_profile(&outer, &inner).unwrap();
        assert_eq!(q.dims(), vec![2, 1, 3]);
        assert_eq!(
            soc_length(&q, &p2),
            soc_length(&outer, &p2) - soc_length(&inner, &p2)
        );
        let zero = SubrepProfile::zero(RED, 3, 3, &p2).unwrap();
        assert_eq!(quotient_profile(&outer, &zero).unwrap(), outer);
        assert_eq!(quotient_profile(&outer, &outer).unwrap(), zero);
        assert!(socle_additivity_check(&inner, &outer, &p2).unwrap());
        assert!(quotient_profile(&inner, &outer).is_err());
    }

    #[test]
    fn complement_uses_outer_basis() {
        let a = span(3, 3, &[&[1, 1, 0]]);
        let b = span(3, 3, &[&[1, 1, 0], &[0, 0, 1]]);
        let c = a.complement_in(&b).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.is_subspace_of(&b));
        assert!(c.intersection(&a).unwrap().is_zero());
    }

    #[test]
    fn subspace_counts() {
        // F_3^2 has 1 + 4 + 1 subspaces, F_2^3 has 1 + 7 + 7 + 1
        let zero = Subspace::zero(3, 2).unwrap();
        assert_eq!(zero.subspaces_up_to(&Subspace::full(3, 2).unwrap()).unwrap().len(), 6);
        let zero = Subspace::zero(2, 3).unwrap();
        assert_eq!(zero.subspaces_up_to(&Subspace::full(2, 3).unwrap()).unwrap().len(), 16);
    }

    #[test]
    fn chain_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let p1 = params(1);
        let full = SubrepProfile::full(RED, 2, 2, &p1).unwrap();
        let zero = SubrepProfile::zero(RED, 2, 2, &p1).unwrap();
        let report = max_chain_check(&zero, &full, 20, &mut rng, &p1).unwrap();
        assert_eq!(report.exhaustive_max, Some(4));
        assert!(report.passed);

        let full = SubrepProfile::full(IRR, 2, 2, &p1).unwrap();
        let zero = SubrepProfile::zero(IRR, 2, 2, &p1).unwrap();
        let report = max_chain_check(&zero, &full, 20, &mut rng, &p1).unwrap();
        assert_eq!(report.exhaustive_max, Some(2));
        assert!(report.passed);

        let report = max_chain_check(&full, &full, 5, &mut rng, &p1).unwrap();
        assert_eq!((report.bound, report.exhaustive_max, report.random_max), (0, Some(0), 0));
    }

    #[test]
    fn ps_decomposition_examples() {
        for (f, r, bound, soc) in [(1, 2, 0, 0), (2, 3, 3, 6), (3, 1, 2, 6)] {
            let p = params(f);
            let full = SubrepProfile::full(RED, r, 3, &p).unwrap();
            let d = ps_decomposition(&full, r, &p).unwrap();
            assert_eq!((d.low_multiplicity, d.high_multiplicity), (r, r));
            assert_eq!(d.remainder_length_bound, bound);
            assert_eq!(d.remainder_socle_length, soc);
            assert_eq!(d.remainder.dims()[0], 0);
            assert_eq!(d.remainder.dims()[f as usize], 0);
        }
        let p = params(2);
        let partial = SubrepProfile::from_dims(RED, 2, 3, &[2, 1, 2], &p).unwrap();
        assert!(ps_decomposition(&partial, 2, &p).is_err());
        let irr = SubrepProfile::full(IRR, 2, 3, &p).unwrap();
        assert!(ps_decomposition(&irr, 2, &p).is_err());
    }
}
