//! Affine `f`-tuples `λ = (±x_0 + c_0, ..., ±x_{f-1} + c_{f-1})` and the two
//! finite families built from them.
//!
//! * [`enumerate_d`] is the family indexing the Serre weights of a reducible
//!   split `ρ̄`. Every position carries class `A = {x, x+1}` or
//!   `B = {p-2-x, p-3-x}`; inside its class the form is the first element when
//!   the cyclic predecessor lies in `A` and the second when it lies in `B`.
//! * [`enumerate_p_ind`] indexes the constituents of a tame principal series.
//!   Classes are `A' = {x, x-1}` and `B' = {p-2-x, p-1-x}` with the same
//!   transfer rule.
//!
//! Both families are cyclic (`x_f = x_0`), so choosing a class per position
//! determines the tuple and each family has exactly `2^f` members. For `f = 1`
//! the families are listed directly.

use std::collections::BTreeSet;
use std::fmt;

use crate::weights::{Params, SerreWeight};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// `λ_i(x) = sign · x + offset`, with a concrete integer offset (so `p - 3 - x`
/// has offset `p - 3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineForm {
    pub sign: Sign,
    pub offset: i64,
}

impl AffineForm {
    /// `x + c`.
    pub fn plus(c: i64) -> Self {
        AffineForm {
            sign: Sign::Plus,
            offset: c,
        }
    }

    /// `c - x`.
    pub fn minus(c: i64) -> Self {
        AffineForm {
            sign: Sign::Minus,
            offset: c,
        }
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.sign.value() * x + self.offset
    }

    /// Renders the form symbolically, `x+1` or `P-3-x`.
    pub fn token(&self, params: &Params) -> String {
        match self.sign {
            Sign::Plus if self.offset >= 0 => format!("x+{}", self.offset),
            Sign::Plus => format!("x-{}", -self.offset),
            Sign::Minus => {
                let shift = self.offset - params.p() as i64;
                if shift <= 0 {
                    format!("P-{}-x", -shift)
                } else {
                    format!("P+{}-x", shift)
                }
            }
        }
    }

    /// Parses the tokens produced by [`AffineForm::token`].
    pub fn parse_token(token: &str, params: &Params) -> Result<Self> {
        let bad = || Error::validation("tuple", format!("cannot parse affine form `{token}`"));
        let t = token.trim();
        let parse_int = |s: &str| s.parse::<i64>().map_err(|_| bad());
        if t == "x" {
            return Ok(AffineForm::plus(0));
        }
        if let Some(rest) = t.strip_prefix("x+") {
            return Ok(AffineForm::plus(parse_int(rest)?));
        }
        if let Some(rest) = t.strip_prefix("x-") {
            return Ok(AffineForm::plus(-parse_int(rest)?));
        }
        let p = params.p() as i64;
        if let Some(body) = t.strip_prefix('P').and_then(|s| s.strip_suffix("-x")) {
            if body.is_empty() {
                return Ok(AffineForm::minus(p));
            }
            if let Some(rest) = body.strip_prefix('-') {
                return Ok(AffineForm::minus(p - parse_int(rest)?));
            }
            if let Some(rest) = body.strip_prefix('+') {
                return Ok(AffineForm::minus(p + parse_int(rest)?));
            }
        }
        Err(bad())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineTuple {
    forms: Vec<AffineForm>,
}

impl AffineTuple {
    pub fn new(forms: Vec<AffineForm>) -> Self {
        AffineTuple { forms }
    }

    /// `(x_0, ..., x_{f-1})`.
    pub fn identity(f: usize) -> Self {
        AffineTuple {
            forms: vec![AffineForm::plus(0); f],
        }
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn tokens(&self, params: &Params) -> Vec<String> {
        self.forms.iter().map(|form| form.token(params)).collect()
    }

    /// Parses a comma-separated token list such as `x+1,P-2-x`.
    pub fn parse(text: &str, params: &Params) -> Result<Self> {
        let forms = text
            .split(',')
            .map(|tok| AffineForm::parse_token(tok, params))
            .collect::<Result<Vec<_>>>()?;
        params.check_len(forms.len())?;
        Ok(AffineTuple { forms })
    }

    pub fn display<'a>(&'a self, params: &'a Params) -> impl fmt::Display + 'a {
        DisplayTuple {
            tuple: self,
            params,
        }
    }
}

struct DisplayTuple<'a> {
    tuple: &'a AffineTuple,
    params: &'a Params,
}

impl fmt::Display for DisplayTuple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.tuple.tokens(self.params).join(", "))
    }
}

/// Componentwise `λ_i(r_i)`.
pub fn eval_tuple(lambda: &AffineTuple, r: &[i64]) -> Result<Vec<i64>> {
    if lambda.len() != r.len() {
        return Err(Error::LengthMismatch {
            expected: lambda.len(),
            found: r.len(),
        });
    }
    Ok(lambda.forms.iter().zip(r).map(|(form, &x)| form.eval(x)).collect())
}

/// The determinant exponent `e(λ)(r)`, reduced into `[0, q - 1)`.
///
/// With `S = Σ p^i (r_i - λ_i(r_i))`, this is `S / 2` when the last form has
/// sign `+` and `(q - 1 + S) / 2` when it has sign `-`. An odd numerator is an
/// error.
pub fn e_twist(lambda: &AffineTuple, r: &[i64], params: &Params) -> Result<u64> {
    params.check_len(lambda.len())?;
    let values = eval_tuple(lambda, r)?;
    let mut sum: i128 = 0;
    for (i, (&x, &y)) in r.iter().zip(&values).enumerate() {
        sum += params.p_pow(i) as i128 * (x as i128 - y as i128);
    }
    let last = lambda.forms.last().map(|form| form.sign);
    if last == Some(Sign::Minus) {
        sum += params.modulus() as i128;
    }
    if sum.rem_euclid(2) != 0 {
        return Err(Error::Arithmetic(format!(
            "twist numerator {sum} is odd"
        )));
    }
    Ok(params.reduce(sum / 2))
}

/// `σ_λ = (λ_0(r_0), ..., λ_{f-1}(r_{f-1})) ⊗ det^{e(λ)(r)}`.
pub fn weight_of_tuple(lambda: &AffineTuple, r: &[i64], params: &Params) -> Result<SerreWeight> {
    params.check_len(lambda.len())?;
    let values = eval_tuple(lambda, r)?;
    let max = params.p() - 1;
    let mut digits = Vec::with_capacity(values.len());
    for (index, &value) in values.iter().enumerate() {
        if value < 0 || value as u64 > max {
            return Err(Error::DigitRange { index, value, max });
        }
        digits.push(value as u64);
    }
    let twist = e_twist(lambda, r, params)?;
    Ok(SerreWeight::from_parts_unchecked(digits, twist))
}

/// A family of tuples built by class transfer: `classes[k][j]` is the form used
/// for class `k` when the predecessor has class `j`.
struct TransferFamily {
    classes: [[AffineForm; 2]; 2],
    f1: [AffineForm; 2],
}

impl TransferFamily {
    fn d(params: &Params) -> Self {
        let p = params.p() as i64;
        TransferFamily {
            classes: [
                [AffineForm::plus(0), AffineForm::plus(1)],
                [AffineForm::minus(p - 2), AffineForm::minus(p - 3)],
            ],
            f1: [AffineForm::plus(0), AffineForm::minus(p - 3)],
        }
    }

    fn p_ind(params: &Params) -> Self {
        let p = params.p() as i64;
        TransferFamily {
            classes: [
                [AffineForm::plus(0), AffineForm::plus(-1)],
                [AffineForm::minus(p - 2), AffineForm::minus(p - 1)],
            ],
            f1: [AffineForm::plus(0), AffineForm::minus(p - 1)],
        }
    }

    fn enumerate(&self, f: usize) -> Vec<AffineTuple> {
        let mut out: Vec<AffineTuple> = if f == 1 {
            self.f1
                .iter()
                .map(|&form| AffineTuple::new(vec![form]))
                .collect()
        } else {
            (0u64..1 << f)
                .map(|mask| {
                    let class = |i: usize| ((mask >> i) & 1) as usize;
                    let forms = (0..f)
                        .map(|i| {
                            let pred = class((i + f - 1) % f);
                            self.classes[class(i)][pred]
                        })
                        .collect();
                    AffineTuple::new(forms)
                })
                .collect()
        };
        out.sort();
        out
    }
}

/// The tuple family indexing Serre weights of a reducible split `ρ̄`, sorted.
pub fn enumerate_d(params: &Params) -> Vec<AffineTuple> {
    TransferFamily::d(params).enumerate(params.f())
}

/// The tuple family indexing principal-series constituents, sorted.
pub fn enumerate_p_ind(params: &Params) -> Vec<AffineTuple> {
    TransferFamily::p_ind(params).enumerate(params.f())
}

/// `J_λ`: positions whose form is `x+1`, `x+2` or `p-3-x`.
pub fn j_set(lambda: &AffineTuple, params: &Params) -> BTreeSet<usize> {
    let p = params.p() as i64;
    let shifted = [
        AffineForm::plus(1),
        AffineForm::plus(2),
        AffineForm::minus(p - 3),
    ];
    lambda
        .forms
        .iter()
        .enumerate()
        .filter(|(_, form)| shifted.contains(form))
        .map(|(j, _)| j)
        .collect()
}

/// `ℓ(λ) = |J_λ|`.
pub fn length(lambda: &AffineTuple, params: &Params) -> usize {
    j_set(lambda, params).len()
}

/// Whether the two families meet exactly in the identity tuple.
pub fn check_intersection(params: &Params) -> bool {
    let d: BTreeSet<AffineTuple> = enumerate_d(params).into_iter().collect();
    let meet: Vec<AffineTuple> = enumerate_p_ind(params)
        .into_iter()
        .filter(|lambda| d.contains(lambda))
        .collect();
    meet == vec![AffineTuple::identity(params.f())]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(p: i64, f: i64) -> Params {
        Params::new(p, f).unwrap()
    }

    fn tuple(text: &str, params: &Params) -> AffineTuple {
        AffineTuple::parse(text, params).unwrap()
    }

    #[test]
    fn eval_examples() {
        let p = params(29, 2);
        assert_eq!(eval_tuple(&AffineTuple::identity(2), &[3, 4]).unwrap(), vec![3, 4]);
        let lam = tuple("x+1,P-2-x", &p);
        assert_eq!(eval_tuple(&lam, &[3, 4]).unwrap(), vec![4, 23]);
        let p1 = params(29, 1);
        assert_eq!(eval_tuple(&tuple("P-3-x", &p1), &[5]).unwrap(), vec![21]);
        assert!(matches!(
            eval_tuple(&lam, &[1]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn e_twist_examples() {
        let p1 = params(29, 1);
        assert_eq!(e_twist(&AffineTuple::identity(1), &[7], &p1).unwrap(), 0);
        let lam = tuple("P-3-x", &p1);
        for r in 0..28 {
            assert_eq!(e_twist(&lam, &[r], &p1).unwrap(), ((r + 1) % 28) as u64);
        }
        let p2 = params(29, 2);
        let lam = tuple("x+1,P-2-x", &p2);
        for (r0, r1) in [(3, 4), (1, 1), (20, 25)] {
            let expected = (29 * r1 + 29 - 1) % (29 * 29 - 1);
            assert_eq!(e_twist(&lam, &[r0, r1], &p2).unwrap(), expected as u64);
        }
    }

    #[test]
    fn e_twist_rejects_odd_numerator() {
        let p1 = params(29, 1);
        let err = e_twist(&tuple("x+1", &p1), &[3], &p1).unwrap_err();
        assert_eq!(err, Error::Arithmetic("twist numerator -1 is odd".into()));
    }

    #[test]
    fn weight_of_tuple_examples() {
        let p2 = params(29, 2);
        assert_eq!(
            weight_of_tuple(&AffineTuple::identity(2), &[3, 4], &p2).unwrap(),
            SerreWeight::new(&[3, 4], 0, &p2).unwrap()
        );
        let p1 = params(29, 1);
        assert_eq!(
            weight_of_tuple(&tuple("P-3-x", &p1), &[3], &p1).unwrap(),
            SerreWeight::new(&[23], 4, &p1).unwrap()
        );
        assert_eq!(
            weight_of_tuple(&tuple("P-1-x", &p1), &[3], &p1).unwrap(),
            SerreWeight::new(&[25], 3, &p1).unwrap()
        );
    }

    #[test]
    fn weight_of_tuple_range_error() {
        let p1 = params(29, 1);
        let err = weight_of_tuple(&tuple("x-1", &p1), &[0], &p1).unwrap_err();
        assert_eq!(
            err,
            Error::DigitRange {
                index: 0,
                value: -1,
                max: 28
            }
        );
    }

    #[test]
    fn d_small_cases() {
        let p1 = params(29, 1);
        assert_eq!(enumerate_d(&p1), vec![tuple("P-3-x", &p1), tuple("x+0", &p1)]);
        let p2 = params(29, 2);
        let mut expected = vec![
            tuple("x,x", &p2),
            tuple("x+1,P-2-x", &p2),
            tuple("P-2-x,x+1", &p2),
            tuple("P-3-x,P-3-x", &p2),
        ];
        expected.sort();
        assert_eq!(enumerate_d(&p2), expected);
    }

    #[test]
    fn p_ind_small_cases() {
        let p1 = params(29, 1);
        assert_eq!(enumerate_p_ind(&p1), vec![tuple("P-1-x", &p1), tuple("x", &p1)]);
        let p2 = params(29, 2);
        let mut expected = vec![
            tuple("x,x", &p2),
            tuple("x-1,P-2-x", &p2),
            tuple("P-2-x,x-1", &p2),
            tuple("P-1-x,P-1-x", &p2),
        ];
        expected.sort();
        assert_eq!(enumerate_p_ind(&p2), expected);
    }

    #[test]
    fn j_set_examples() {
        let p1 = params(29, 1);
        assert!(j_set(&AffineTuple::identity(1), &p1).is_empty());
        assert_eq!(j_set(&tuple("P-3-x", &p1), &p1), BTreeSet::from([0]));
        let p2 = params(29, 2);
        assert_eq!(j_set(&tuple("x+1,P-2-x", &p2), &p2), BTreeSet::from([0]));
        assert_eq!(length(&tuple("P-3-x,P-3-x", &p2), &p2), 2);
    }

    #[test]
    fn intersection_small_f() {
        for f in 1..=6 {
            assert!(check_intersection(&params(29, f)), "f = {f}");
        }
    }

    #[test]
    fn token_round_trip() {
        let p = params(31, 3);
        for lam in enumerate_d(&p).into_iter().chain(enumerate_p_ind(&p)) {
            let text = lam.tokens(&p).join(",");
            assert_eq!(AffineTuple::parse(&text, &p).unwrap(), lam);
        }
        assert_eq!(AffineForm::minus(31).token(&p), "P-0-x");
        assert!(AffineForm::parse_token("y+1", &p).is_err());
        assert!(AffineTuple::parse("x,x", &p).is_err());
    }
}
