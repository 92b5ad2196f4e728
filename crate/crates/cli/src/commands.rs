use std::collections::BTreeSet;

use modp_gl2::charcycle::{
    char_cycle, minimal_primes, mult_at_prime, profile_p0_multiplicity, CycleVector, MinimalPrime,
    ModuleSpec, MonomialIdeal,
};
use modp_gl2::diagram::{
    char_injectivity_check, hypothesis_profile, jh_meets_weightset, jh_principal_series,
    serre_weights,
};
use modp_gl2::lattice::{
    length_bound, max_chain_check, ps_decomposition, quotient_profile, soc_length, xi_dimension,
    SubrepProfile,
};
use modp_gl2::oracle;
use modp_gl2::tuples::{
    e_twist, enumerate_d, enumerate_p_ind, j_set, length, weight_of_tuple, AffineTuple,
};
use modp_gl2::weights::{
    char_of_weight, conj_s, count_generic_weights, in_global_window, is_inertial_generic,
    is_weight_generic, required_genericity, weight_s, InertialData, InertialKind, Params,
    SerreWeight, TheoremId,
};
use modp_gl2::{binomial, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::parse;
use crate::report::{self, Check, Report};
use crate::{
    CyclesCmd, DiagramCmd, FieldArgs, LatticeCmd, PairArgs, ParamArgs, TupleArgs, TuplesCmd,
    WeightArgs, WeightsCmd,
};

fn start(command: &str, args: ParamArgs) -> Result<(Report, Params)> {
    let params = Params::new(args.p, args.f)?;
    let mut rep = Report::new(command);
    rep.param("p", args.p).param("f", args.f);
    Ok((rep, params))
}

fn start_weight(command: &str, args: &WeightArgs) -> Result<(Report, Params, SerreWeight)> {
    let (mut rep, params) = start(command, args.params)?;
    rep.param("digits", args.digits.clone()).param("twist", args.twist);
    let sigma = SerreWeight::new(&args.digits, args.twist, &params)?;
    Ok((rep, params, sigma))
}

fn start_field(command: &str, args: ParamArgs, field: FieldArgs) -> Result<(Report, Params)> {
    let (mut rep, params) = start(command, args)?;
    rep.param("r", field.r).param("field", field.field);
    Ok((rep, params))
}

pub fn weights(cmd: WeightsCmd) -> Result<Report> {
    match cmd {
        WeightsCmd::Char(args) => {
            let (mut rep, params, sigma) = start_weight("weights char", &args)?;
            rep.result("character", report::character(&char_of_weight(&sigma, &params)?))
                .result("weight", report::weight(&sigma));
            Ok(rep)
        }
        WeightsCmd::S(args) => {
            let (mut rep, params, sigma) = start_weight("weights s", &args)?;
            let image = weight_s(&sigma, &params)?;
            let chi = char_of_weight(&sigma, &params)?;
            let chi_image = char_of_weight(&image, &params)?;
            rep.result("weight", report::weight(&sigma))
                .result("character", report::character(&chi))
                .result("image", report::weight(&image))
                .result("image_character", report::character(&chi_image));
            rep.check(Check::new(
                "image-carries-conjugate-character",
                chi_image == conj_s(chi) && image != sigma,
                report::character(&conj_s(chi)),
            ));
            Ok(rep)
        }
        WeightsCmd::Generic {
            params: pargs,
            n,
            digits,
            twist,
            kind,
        } => {
            let (mut rep, params) = start("weights generic", pargs)?;
            rep.param("n", n);
            rep.result("generic_weight_count", count_generic_weights(n, &params));
            if let Some(digits) = digits {
                rep.param("digits", digits.clone()).param("twist", twist);
                match kind {
                    Some(kind) => {
                        let kind = parse::kind(&kind)?;
                        rep.param("kind", kind.as_str());
                        let rho = InertialData::new(&digits, kind, twist, &params)?;
                        rep.result("inertial_generic", is_inertial_generic(&rho, n, &params))
                            .result("in_global_window", in_global_window(&rho, &params));
                    }
                    None => {
                        let sigma = SerreWeight::new(&digits, twist, &params)?;
                        rep.result("weight_generic", is_weight_generic(&sigma, n, &params));
                    }
                }
            }
            Ok(rep)
        }
        WeightsCmd::Thresholds { params: pargs, theorem } => {
            let (mut rep, params) = start("weights thresholds", pargs)?;
            let ids: Vec<TheoremId> = match theorem {
                Some(name) => {
                    rep.param("theorem", name.clone());
                    vec![name.parse()?]
                }
                None => TheoremId::ALL.to_vec(),
            };
            let table: serde_json::Map<String, Value> = ids
                .iter()
                .map(|id| (id.as_str().to_string(), json!(required_genericity(*id, &params))))
                .collect();
            rep.result("required_genericity", Value::Object(table));
            let monotone = {
                let v = |id| required_genericity(id, &params);
                v(TheoremId::GlobalFiniteLength) >= v(TheoremId::LengthBound)
                    && v(TheoremId::LengthBound) >= v(TheoremId::GradedStructure)
            };
            rep.check(Check::new("thresholds-monotone", monotone, Value::Null));
            Ok(rep)
        }
    }
}

fn tuple_listing(lambdas: &[AffineTuple], params: &Params, with_length: bool) -> Value {
    lambdas
        .iter()
        .map(|lam| {
            if with_length {
                json!({
                    "tuple": report::tuple(lam, params),
                    "j": j_set(lam, params),
                    "length": length(lam, params),
                })
            } else {
                json!({ "tuple": report::tuple(lam, params) })
            }
        })
        .collect()
}

fn start_tuple(command: &str, args: &TupleArgs) -> Result<(Report, Params, AffineTuple)> {
    let (mut rep, params) = start(command, args.params)?;
    rep.param("tuple", args.tuple.clone())
        .param("digits", args.digits.clone());
    let lambda = AffineTuple::parse(&args.tuple, &params)?;
    Ok((rep, params, lambda))
}

pub fn tuples(cmd: TuplesCmd) -> Result<Report> {
    match cmd {
        TuplesCmd::ListD(pargs) => {
            let (mut rep, params) = start("tuples list-D", pargs)?;
            let d = enumerate_d(&params);
            rep.result("tuples", tuple_listing(&d, &params, true))
                .result("count", d.len());
            rep.check(Check::new("count", d.len() == 1 << params.f(), d.len()));
            if params.f() <= 10 {
                rep.check(Check::new(
                    "matches-brute-force",
                    d == oracle::brute_force_d(&params),
                    Value::Null,
                ));
            }
            Ok(rep)
        }
        TuplesCmd::ListP(pargs) => {
            let (mut rep, params) = start("tuples list-P", pargs)?;
            let pi = enumerate_p_ind(&params);
            rep.result("tuples", tuple_listing(&pi, &params, false))
                .result("count", pi.len());
            rep.check(Check::new("count", pi.len() == 1 << params.f(), pi.len()));
            if params.f() <= 10 {
                rep.check(Check::new(
                    "matches-brute-force",
                    pi == oracle::brute_force_p_ind(&params),
                    Value::Null,
                ));
            }
            Ok(rep)
        }
        TuplesCmd::E(args) => {
            let (mut rep, params, lambda) = start_tuple("tuples e", &args)?;
            rep.result("twist", e_twist(&lambda, &args.digits, &params)?);
            Ok(rep)
        }
        TuplesCmd::Weight(args) => {
            let (mut rep, params, lambda) = start_tuple("tuples weight", &args)?;
            let w = weight_of_tuple(&lambda, &args.digits, &params)?;
            rep.result("weight", report::weight(&w));
            Ok(rep)
        }
        TuplesCmd::Intersection(pargs) => {
            let (mut rep, params) = start("tuples intersection", pargs)?;
            let d: BTreeSet<AffineTuple> = enumerate_d(&params).into_iter().collect();
            let meet: Vec<AffineTuple> = enumerate_p_ind(&params)
                .into_iter()
                .filter(|lam| d.contains(lam))
                .collect();
            let witness: Vec<Value> = meet.iter().map(|l| report::tuple(l, &params)).collect();
            rep.result("intersection", witness.clone());
            let ok = meet == vec![AffineTuple::identity(params.f())];
            let witness = if ok { witness[0].clone() } else { Value::Array(witness) };
            rep.check(Check::new("identity-only", ok, witness));
            Ok(rep)
        }
    }
}

pub fn diagram(cmd: DiagramCmd) -> Result<Report> {
    match cmd {
        DiagramCmd::Weights(args) => {
            let (mut rep, params) = start("diagram weights", args.params)?;
            rep.param("digits", args.digits.clone()).param("twist", args.twist);
            let rho = InertialData::new(&args.digits, InertialKind::ReducibleSplit, args.twist, &params)?;
            let w = serre_weights(&rho, &params)?;
            let levels: Vec<Value> = w
                .by_length()
                .iter()
                .map(|level| {
                    level
                        .iter()
                        .map(|lam| {
                            json!({
                                "tuple": report::tuple(lam, &params),
                                "weight": report::weight(&w.entries()[lam]),
                            })
                        })
                        .collect()
                })
                .collect();
            let sizes: Vec<usize> = w.by_length().iter().map(Vec::len).collect();
            rep.result("by_length", levels).result("count", w.len());
            let f = params.f() as u64;
            let binomial_sizes = sizes
                .iter()
                .enumerate()
                .all(|(l, &n)| n as u64 == binomial(f, l as u64));
            rep.check(Check::new("level-sizes-binomial", binomial_sizes, sizes));
            rep.check(Check::new(
                "characters-distinct",
                char_injectivity_check(&w, &params),
                Value::Null,
            ));
            Ok(rep)
        }
        DiagramCmd::Jh(args) => {
            let (mut rep, params, sigma0) = start_weight("diagram jh", &args)?;
            let jh = jh_principal_series(&sigma0, &params)?;
            rep.result(
                "constituents",
                jh.iter().map(report::weight).collect::<Vec<_>>(),
            );
            rep.check(Check::new(
                "count",
                jh.len() == 1 << params.f(),
                jh.len(),
            ));
            rep.check(Check::new("contains-sigma0", jh.contains(&sigma0), Value::Null));
            // the weight set of ρ̄ with the same digits has σ0 at length 0
            let rho = InertialData::new(&args.digits, InertialKind::ReducibleSplit, 0, &params)?;
            if sigma0.twist() == 0 && is_inertial_generic(&rho, 0, &params) {
                let w = serre_weights(&rho, &params)?;
                let meet = jh_meets_weightset(&sigma0, &w, &params)?;
                rep.result(
                    "meets_weight_set",
                    meet.iter().map(report::weight).collect::<Vec<_>>(),
                );
                rep.check(Check::new(
                    "meets-weight-set-in-sigma0",
                    meet.len() == 1 && meet.contains(&sigma0),
                    meet.len(),
                ));
            }
            if params.f() == 1 {
                let s = weight_s(&sigma0, &params)?;
                rep.check(Check::new("f1-other-is-weight-s", jh.contains(&s), report::weight(&s)));
            }
            Ok(rep)
        }
        DiagramCmd::Profile { params: pargs, r, kind } => {
            let (mut rep, params) = start("diagram profile", pargs)?;
            let kind = parse::kind(&kind)?;
            rep.param("r", r).param("kind", kind.as_str());
            let h = hypothesis_profile(r, &params, kind)?;
            rep.result("ext_dims", h.ext_dims.clone())
                .result("total_ext", h.total_ext)
                .result("weight_count", h.weight_count)
                .result("socle_length", h.socle_length)
                .result("char_multiplicity", h.char_multiplicity);
            let n = h.ext_dims.len() - 1;
            let symmetric = (0..=n).all(|i| h.ext_dim(i) == h.ext_dim(n - i));
            rep.check(Check::new("ext-symmetric", symmetric, Value::Null));
            rep.check(Check::new(
                "ext-total",
                h.total_ext == 4u64.pow(params.f() as u32) * h.r,
                h.total_ext,
            ));
            Ok(rep)
        }
    }
}

fn pair(args: &PairArgs, command: &str) -> Result<(Report, Params, SubrepProfile, SubrepProfile)> {
    let (mut rep, params) = start_field(command, args.params, args.field)?;
    rep.param("outer", args.outer.clone()).param("inner", args.inner.clone());
    let outer = parse::profile(&args.outer, args.field.r, args.field.field, &params)?;
    let inner = parse::profile(&args.inner, args.field.r, args.field.field, &params)?;
    Ok((rep, params, outer, inner))
}

pub fn lattice(cmd: LatticeCmd) -> Result<Report> {
    match cmd {
        LatticeCmd::Soc { params: pargs, field, profile } => {
            let (mut rep, params) = start_field("lattice soc", pargs, field)?;
            rep.param("profile", profile.clone());
            let prof = parse::profile(&profile, field.r, field.field, &params)?;
            let soc = soc_length(&prof, &params);
            rep.result("profile", report::profile(&prof))
                .result("soc_length", soc)
                .result("xi_dimension", xi_dimension(&prof, &params));
            if prof.kind() == InertialKind::ReducibleSplit {
                let m = profile_p0_multiplicity(&prof, &params)?;
                rep.result("p0_multiplicity", m);
                rep.check(Check::new("p0-multiplicity-equals-soc", m == soc, m));
            }
            Ok(rep)
        }
        LatticeCmd::Bound(args) => {
            let (mut rep, params, outer, inner) = pair(&args, "lattice bound")?;
            rep.result("length_bound", length_bound(&outer, &inner, &params)?);
            Ok(rep)
        }
        LatticeCmd::Quotient(args) => {
            let (mut rep, params, outer, inner) = pair(&args, "lattice quotient")?;
            let quotient = quotient_profile(&outer, &inner)?;
            let socs = [
                soc_length(&inner, &params),
                soc_length(&quotient, &params),
                soc_length(&outer, &params),
            ];
            rep.result("quotient", report::profile(&quotient))
                .result("soc_lengths", json!({"inner": socs[0], "quotient": socs[1], "outer": socs[2]}));
            rep.check(Check::new("socle-additivity", socs[0] + socs[1] == socs[2], socs.to_vec()));
            Ok(rep)
        }
        LatticeCmd::Chains {
            params: pargs,
            field,
            lower,
            upper,
            kind,
            trials,
            seed,
        } => {
            let (mut rep, params) = start_field("lattice chains", pargs, field)?;
            let kind = parse::kind(&kind)?;
            rep.param("trials", trials).param("seed", seed);
            let lower = match lower {
                Some(text) => {
                    rep.param("lower", text.clone());
                    parse::profile(&text, field.r, field.field, &params)?
                }
                None => {
                    rep.param("kind", kind.as_str());
                    SubrepProfile::zero(kind, field.r, field.field, &params)?
                }
            };
            let upper = match upper {
                Some(text) => {
                    rep.param("upper", text.clone());
                    parse::profile(&text, field.r, field.field, &params)?
                }
                None => {
                    rep.param("kind", kind.as_str());
                    SubrepProfile::full(lower.kind(), field.r, field.field, &params)?
                }
            };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let chains = max_chain_check(&lower, &upper, trials, &mut rng, &params)?;
            rep.result("length_bound", chains.bound)
                .result("exhaustive_max", chains.exhaustive_max)
                .result("random_max", chains.random_max)
                .result("saturated_length", chains.saturated_len);
            rep.check(Check::new("max-chain-equals-bound", chains.passed, chains.bound));
            Ok(rep)
        }
        LatticeCmd::PsSplit { params: pargs, field } => {
            let (mut rep, params) = start_field("lattice ps-split", pargs, field)?;
            let full = SubrepProfile::full(InertialKind::ReducibleSplit, field.r, field.field, &params)?;
            let ps = ps_decomposition(&full, field.r, &params)?;
            rep.result("low_multiplicity", ps.low_multiplicity)
                .result("high_multiplicity", ps.high_multiplicity)
                .result("remainder", report::profile(&ps.remainder))
                .result("remainder_length_bound", ps.remainder_length_bound)
                .result("remainder_socle_length", ps.remainder_socle_length);
            let r = field.r as u64;
            let f = params.f() as u64;
            rep.check(Check::new(
                "remainder-length-bound",
                ps.remainder_length_bound == r * (f - 1),
                ps.remainder_length_bound,
            ));
            rep.check(Check::new(
                "remainder-socle-length",
                ps.remainder_socle_length == r * ((1 << f) - 2),
                ps.remainder_socle_length,
            ));
            Ok(rep)
        }
    }
}

pub fn cycles(cmd: CyclesCmd) -> Result<Report> {
    match cmd {
        CyclesCmd::Primes(pargs) => {
            let (mut rep, params) = start("cycles primes", pargs)?;
            let primes = minimal_primes(&params);
            rep.result("primes", primes.iter().map(report::prime).collect::<Vec<_>>())
                .result("p0", report::prime(&MinimalPrime::p0(params.f())));
            rep.check(Check::new("count", primes.len() == 1 << params.f(), primes.len()));
            Ok(rep)
        }
        CyclesCmd::Mult { params: pargs, ideal, prime } => {
            let (mut rep, params) = start("cycles mult", pargs)?;
            rep.param("ideal", ideal.clone()).param("prime", prime.clone());
            let ideal = MonomialIdeal::parse(&ideal, params.f())?;
            let q = MinimalPrime::parse(&prime, params.f())?;
            let m = mult_at_prime(&ideal, &q)?;
            rep.result("ideal", ideal.to_string())
                .result("prime", report::prime(&q))
                .result("multiplicity", m);
            let by_saturation = oracle::mult_by_saturation(&ideal, &q)?;
            rep.check(Check::new("matches-saturation", m == by_saturation, by_saturation));
            Ok(rep)
        }
        CyclesCmd::Cycle { params: pargs, summands } => {
            let (mut rep, params) = start("cycles cycle", pargs)?;
            rep.param("summands", summands.clone());
            let parsed = summands
                .iter()
                .map(|s| parse::summand(s, params.f()))
                .collect::<Result<Vec<_>>>()?;
            let module = ModuleSpec::direct(parsed.clone());
            let z = char_cycle(&module, &params)?;
            rep.result("cycle", report::cycle(&z))
                .result("total_multiplicity", module.total_multiplicity());
            let mut piecewise = CycleVector::zero(&params);
            for s in parsed {
                piecewise = piecewise.add(&char_cycle(&ModuleSpec::direct(vec![s]), &params)?)?;
            }
            rep.check(Check::new("additive-over-summands", piecewise == z, Value::Null));
            let total = module.total_multiplicity();
            rep.check(Check::new(
                "coefficients-bounded",
                z.coeffs().values().all(|&c| c <= total),
                total,
            ));
            Ok(rep)
        }
    }
}
