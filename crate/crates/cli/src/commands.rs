//! Command implementations. Each returns a [`RunReport`]; the binary decides
//! how to print and persist it.

use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use num_bigint::BigUint;
use qrz9_core::codes_r::dot_r;
use qrz9_core::cyclic::{self, all_cyclic_z9, count_cyclic, self_dual_exists, self_dual_search, CyclicCodeR, CyclicCodeZ9};
use qrz9_core::engine::{self, audit_distribution, fast_path_eligible, gray_distribution_fast, AuditReport, SweepPlan};
use qrz9_core::factor::{crt_idempotents, factor_xn_minus_1_seeded};
use qrz9_core::linear::{Row, DEFAULT_BUDGET};
use qrz9_core::qr::{self, ExtensionVariant, QrCase, QrFamily};
use qrz9_core::ring::{gray_vector, lee_weight_vector};
use qrz9_core::weight::{macwilliams, pow9};
use qrz9_core::{GrayMatrix, LinearCodeR, LinearCodeZ9, PolyZ9, RElement, WeightDistribution, Z9};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde_json::{json, Value};

use crate::fixtures::{self, Generators};
use crate::formats::{big, distribution_value, poly_value, r_rows_value, read_code, read_distribution, rows_value, write_json, DistributionJson};
use crate::report::{RunReport, Status};
use crate::sweep::parallel_sweep;

/// Flags shared by every command.
#[derive(Clone, Debug)]
pub struct Globals {
    pub threads: usize,
    pub budget: u128,
    pub seed: u64,
    pub progress: bool,
}

impl Default for Globals {
    fn default() -> Globals {
        Globals { threads: 1, budget: engine::DEFAULT_SWEEP_BUDGET, seed: qrz9_core::factor::DEFAULT_SEED, progress: false }
    }
}

/// Parses `"2.8e-6"`, `"0.5"` or `"3/10"` into an exact fraction.
pub fn parse_ratio(s: &str) -> Result<(u64, u64)> {
    if let Some((a, b)) = s.split_once('/') {
        return Ok((a.trim().parse()?, b.trim().parse()?));
    }
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>()?),
        None => (s, 0),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    let digits: u64 = format!("{int}{frac}").parse().with_context(|| format!("bad decimal {s:?}"))?;
    let scale = exp - frac.len() as i32;
    if scale >= 0 {
        Ok((digits * 10u64.pow(scale as u32), 1))
    } else {
        Ok((digits, 10u64.pow((-scale) as u32)))
    }
}

pub fn parse_gray_matrix(s: &str) -> Result<GrayMatrix> {
    let v: Vec<i64> = s.split(',').map(|t| t.trim().parse()).collect::<Result<_, _>>().context("matrix must be four integers \"p,q,r,s\"")?;
    if v.len() != 4 {
        bail!("matrix must be four integers \"p,q,r,s\"");
    }
    Ok(GrayMatrix::from_ints([[v[0], v[1]], [v[2], v[3]]])?)
}

fn first_difference(got: &WeightDistribution, want: &WeightDistribution) -> Option<Value> {
    got.first_difference(want).map(|w| {
        json!({ "weight": w, "computed": big(&got.count(w)), "expected": big(&want.count(w)) })
    })
}

fn z9_word(v: &[Z9]) -> Value {
    Value::Array(v.iter().map(|x| Value::from(x.value())).collect())
}

pub fn audit_value(a: &AuditReport) -> Value {
    json!({
        "length": a.length,
        "total": big(&a.total),
        "claimed_cardinality": big(&a.claimed_cardinality),
        "sum_ok": a.sum_ok,
        "min_weight": a.min_weight,
        "log3_cardinality": a.log3_cardinality,
        "singleton_bound": a.singleton_bound,
        "singleton_defect": a.singleton_defect,
        "low_weight_t": a.low_weight_t,
        "low_weight_count": big(&a.low_weight_count),
        "low_weight_ratio": qrz9_core::weight::ratio_f64(&a.low_weight_count, &a.claimed_cardinality),
        "low_weight_threshold": format!("{}/{}", a.low_weight_threshold.0, a.low_weight_threshold.1),
        "low_weight_ok": a.low_weight_ok,
        "macwilliams_fixed_point": a.macwilliams_fixed_point,
    })
}

pub fn cmd_factor(g: &Globals, n: usize) -> Result<RunReport> {
    let mut r = RunReport::new("factor", json!({ "n": n, "seed": g.seed }));
    let factors = factor_xn_minus_1_seeded(n, g.seed)?;
    let product = factors.iter().fold(PolyZ9::one(), |acc, f| &acc * f);
    r.check("product", product == PolyZ9::x_n_minus_1(n), "product of factors is X^n - 1", || json!(product.to_string()));
    let es = crt_idempotents(&factors, n)?;
    let sum = es.iter().fold(PolyZ9::zero().with_modulus(n), |acc, e| &acc + e);
    r.check("idempotents", es.iter().all(|e| e * e == *e), "every e_i is idempotent", || json!(null));
    r.check("orthogonal", (0..es.len()).all(|i| (0..i).all(|j| (&es[i] * &es[j]).is_zero())), "e_i e_j = 0 for i != j", || json!(null));
    r.check("complete", sum == PolyZ9::one().with_modulus(n), "sum of the e_i is 1", || json!(sum.to_string()));
    let count = count_cyclic(n)?;
    r.result("factors", Value::Array(factors.iter().map(poly_value).collect()));
    r.result("idempotents", Value::Array(es.iter().map(poly_value).collect()));
    r.result("r", json!(count.r));
    r.result("cyclic_codes_z9", big(&count.over_z9));
    r.result("cyclic_codes_r", big(&count.over_r));
    Ok(r)
}

fn triple_value(c: &CyclicCodeZ9) -> Value {
    json!({
        "f": c.f().to_string(),
        "g": c.g().to_string(),
        "h": c.h().to_string(),
        "log3_cardinality": c.log3_cardinality(),
    })
}

pub fn cmd_cyclic(_g: &Globals, n: usize, search: bool) -> Result<RunReport> {
    let mut r = RunReport::new("cyclic", json!({ "n": n, "self_dual_search": search }));
    let count = count_cyclic(n)?;
    let all = all_cyclic_z9(n)?;
    let mut forms: Vec<Vec<Row>> = all.iter().map(|c| c.to_linear().standard_form().to_vec()).collect();
    forms.sort();
    forms.dedup();
    r.check(
        "count",
        BigUint::from(forms.len()) == count.over_z9,
        format!("{} distinct cyclic Z9 codes, 3^{} expected", forms.len(), count.r),
        || json!({ "distinct": forms.len(), "expected": big(&count.over_z9) }),
    );
    let bad_gen = all.iter().find(|c| cyclic::ideal_code(&c.principal_generator(), n) != c.to_linear());
    r.check("principal", bad_gen.is_none(), "f*g + 3f generates (f*g, 3*f*h)", || json!(bad_gen.map(triple_value)));
    r.result("r", json!(count.r));
    r.result("cyclic_codes_z9", big(&count.over_z9));
    r.result("cyclic_codes_r", big(&count.over_r));
    r.result("triples", Value::Array(all.iter().map(triple_value).collect()));
    r.result("self_dual_exists", json!(self_dual_exists(n)));
    if search {
        let s = self_dual_search(n)?;
        let mismatch = s.z9_self_dual.iter().chain(&s.z9_criterion).find(|c| !(s.z9_self_dual.contains(c) && s.z9_criterion.contains(c)));
        r.check(
            "criterion",
            s.criterion_agrees(),
            "self-dual components coincide with f = h*, g = g*",
            || json!(mismatch.map(triple_value)),
        );
        r.check(
            "existence",
            self_dual_exists(n) == (s.nontrivial_r_count() > 0),
            format!("3^j = -1 (mod n) unsolvable iff a self-dual code other than 3R^n exists ({} found)", s.nontrivial_r_count()),
            || json!({ "self_dual_exists": self_dual_exists(n), "nontrivial": s.nontrivial_r_count() }),
        );
        r.result("self_dual_components", Value::Array(s.z9_self_dual.iter().map(triple_value).collect()));
        r.result("self_dual_r_codes", json!(s.r_count));
        r.result("only_3Rn", json!(s.only_trivial));
    }
    Ok(r)
}

/// `matrix` without arguments means the listed top row for the class of `p`.
pub fn resolve_extension(family: &QrFamily, s: &str) -> Result<ExtensionVariant> {
    if s == "matrix" {
        let (corner, constant) = qr::listed_top_row(&family.class);
        return Ok(ExtensionVariant::Matrix { corner, constant });
    }
    fixtures::parse_variant(s)
}

fn r_poly_value(p: &qrz9_core::PolyR) -> Value {
    json!({ "u": p.a.to_string(), "1-u": p.b.to_string() })
}

/// Family construction, table checks, K, and optionally the six properties,
/// one extension and the extended-code adjudication.
pub fn qr_report(p: u64, verify: bool, extend: Option<&str>, adjudicate: bool) -> Result<RunReport> {
    let mut r = RunReport::new("qr", json!({ "p": p, "verify": verify, "extend": extend, "adjudicate_t7": adjudicate }));
    let class = qr::classify(p)?;
    r.result(
        "classification",
        json!({ "case": class.case.to_string(), "r": class.r, "r_mod3": class.r_mod3, "k_reading": "k >= 0" }),
    );
    let table = qr::check_table(p)?;
    let mut rows = Vec::new();
    for (e, ok) in &table {
        rows.push(json!({ "listed": e.label, "template": e.template.to_string(), "idempotent": ok }));
        r.claim(format!("table/{}", e.label), *ok, format!("listed element {} is idempotent", e.label), || {
            json!({ "element": e.label, "square_differs": true })
        });
    }
    r.result("idempotent_table", Value::Array(rows));
    let family = qr::build_family(p)?;
    r.push("family", Status::Pass, "eD1, eD2, eE1, eE2 are idempotent", None);
    r.result(
        "idempotents",
        json!({
            "D1": r_poly_value(&family.e_d1),
            "D2": r_poly_value(&family.e_d2),
            "E1": r_poly_value(&family.e_e1),
            "E2": r_poly_value(&family.e_e2),
        }),
    );
    let k = qr::determine_k(&family)?;
    r.claim(
        "K",
        k.in_candidates,
        format!("eD1*eD2 = {}J lies in the listed candidate set", k.scalar.map_or("?".into(), |c| c.to_string())),
        || r_poly_value(&k.product),
    );
    r.check("K/intersection", k.generates_intersection, "(eD1*eD2) = D1 ∩ D2", || r_poly_value(&k.product));
    r.result("K", json!({ "scalar": k.scalar.map(|c| c.value()), "poly": family.k.to_string() }));
    r.result(
        "log3_cardinalities",
        json!({
            "D1": family.d1.log3_cardinality(), "D2": family.d2.log3_cardinality(),
            "E1": family.e1.log3_cardinality(), "E2": family.e2.log3_cardinality(),
        }),
    );
    if verify {
        let pr = qr::verify_theorem(&family)?;
        for v in &pr.verdicts {
            r.check(format!("property/{}", v.item), v.pass, v.claim.clone(), || json!(v.witness));
        }
    }
    if let Some(e) = extend {
        let variant = resolve_extension(&family, e)?;
        let mut exts = Vec::new();
        for i in [1u8, 2] {
            let ext = qr::extend(&family, i, variant)?;
            if variant == ExtensionVariant::Parity {
                let ok = ext.generator.iter().all(|row| row.iter().fold(RElement::ZERO, |a, &x| a + x).is_zero());
                r.check(format!("extension/{i}/parity"), ok, "every generator row has coordinate sum 0", || json!(null));
                r.check(
                    format!("extension/{i}/size"),
                    ext.code.log3_cardinality() == family.d(i).log3_cardinality(),
                    "extension keeps the cardinality",
                    || json!(ext.code.log3_cardinality()),
                );
            }
            exts.push(json!({
                "base": i,
                "variant": variant.to_string(),
                "log3_cardinality": ext.code.log3_cardinality(),
                "self_orthogonal": ext.code.is_self_orthogonal(),
                "self_dual": ext.code.is_self_dual(),
                "generator": r_rows_value(&ext.generator),
            }));
        }
        r.result("extensions", Value::Array(exts));
    }
    if adjudicate {
        adjudication_into(&mut r, &family)?;
    }
    Ok(r)
}

fn adjudication_into(r: &mut RunReport, family: &QrFamily) -> Result<()> {
    let t7 = qr::adjudicate_theorem7(family)?;
    let (corner, t) = t7.top_row;
    r.check(
        "t7/parity-is-matrix",
        t7.parity_equals_matrix == [true, true],
        format!("parity extension equals the span of the ({corner},{t},...,{t}) top row over E_i"),
        || json!(t7.parity_equals_matrix),
    );
    let gram: Vec<Vec<RElement>> = t7.gram.clone();
    r.result(
        "theorem7",
        json!({
            "case": t7.case.to_string(),
            "top_row": [corner.value(), t.value()],
            "top_self_product": t7.top_self_product_int,
            "top_self_product_mod9": t7.top_self_product.value(),
            "gram": r_rows_value(&gram),
            "parity_self_dual": t7.parity_self_dual,
            "corner_search": t7.corner_search.iter().map(|c| json!({
                "corner": c.corner.value(),
                "self_product": c.self_product_int,
                "self_product_mod9": c.self_product.value(),
                "self_orthogonal": c.self_orthogonal,
                "self_dual": c.self_dual,
            })).collect::<Vec<_>>(),
            "self_dual_corners": t7.self_dual_corners().iter().map(|c| c.value()).collect::<Vec<_>>(),
            "crosswise": t7.crosswise,
        }),
    );
    match t7.case {
        QrCase::I => r.claim(
            "t7/self-dual",
            t7.claim_holds(),
            "parity-extended D^_1, D^_2 are self-dual",
            || json!({ "witness": t7.witness, "self_dual_corners": t7.self_dual_corners().iter().map(|c| c.value()).collect::<Vec<_>>() }),
        ),
        QrCase::II => r.claim("t7/crosswise", t7.claim_holds(), "dual(D^_1) = D~_2 and dual(D^_2) = D~_1", || json!(t7.crosswise)),
    }
    Ok(())
}

pub fn cmd_qr(_g: &Globals, p: u64, verify: bool, extend: Option<&str>, adjudicate: bool) -> Result<RunReport> {
    qr_report(p, verify, extend, adjudicate)
}

pub fn cmd_gray(_g: &Globals, vector: &str, matrix: Option<&str>) -> Result<RunReport> {
    let a = match matrix {
        Some(m) => parse_gray_matrix(m)?,
        None => GrayMatrix::default(),
    };
    let v: Vec<RElement> = vector.split(';').map(|s| s.trim().parse()).collect::<Result<_, _>>()?;
    let mut r = RunReport::new("gray", json!({ "vector": vector, "matrix": matrix }));
    let img = gray_vector(&v, &a);
    r.result("image", z9_word(&img));
    r.result("lee_weight", json!(lee_weight_vector(&v, &a)));
    r.result("standard_form", Value::Array(v.iter().map(|x| {
        let (s, t) = x.to_standard();
        json!(format!("{s}+{t}u"))
    }).collect()));
    r.result("ideals", Value::Array(v.iter().map(|x| json!(x.ideal().label())).collect()));
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Fast,
    Sweep,
}

/// Gray distribution by the fast path when allowed, otherwise by the threaded sweep.
pub fn gray_distribution(g: &Globals, c: &LinearCodeR, a: &GrayMatrix, method: Method, full: bool) -> Result<(WeightDistribution, &'static str)> {
    let budget = if full { u128::MAX } else { g.budget };
    let use_fast = match method {
        Method::Fast => true,
        Method::Sweep => false,
        Method::Auto => fast_path_eligible(c),
    };
    if use_fast {
        return Ok((gray_distribution_fast(c, a, DEFAULT_BUDGET)?, "fast"));
    }
    let plan = match SweepPlan::new(c, a, budget) {
        Ok(p) => p,
        Err(qrz9_core::Error::BudgetExceeded { required, .. }) if !full => {
            let secs = required as f64 * 2e-9 / g.threads.max(1) as f64;
            bail!("sweep needs {required} pairs (about {secs:.0} s at 2 ns/pair on {} threads); pass --full or raise --budget", g.threads)
        }
        Err(e) => return Err(e.into()),
    };
    Ok((parallel_sweep(&plan, g.threads, g.progress), "sweep"))
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_wdist(g: &Globals, code: &Path, matrix: Option<&str>, method: Method, full: bool, out: Option<&Path>, t: usize, threshold: &str) -> Result<RunReport> {
    let c = read_code(code)?;
    let a = match matrix {
        Some(m) => parse_gray_matrix(m)?,
        None => GrayMatrix::default(),
    };
    let mut r = RunReport::new("wdist", json!({ "code": code.display().to_string(), "matrix": matrix, "full": full, "t": t, "threshold": threshold }));
    let (d, used) = gray_distribution(g, &c, &a, method, full)?;
    let audit = audit_distribution(&d, &c.cardinality(), t, parse_ratio(threshold)?);
    r.check("sum", audit.sum_ok, "counts add up to |C|", || big(&audit.total));
    r.result("method", json!(used));
    r.result("self_dual", json!(c.is_self_dual()));
    if c.is_self_dual() {
        r.check("macwilliams", audit.macwilliams_fixed_point, "self-dual code has a MacWilliams-invariant distribution", || json!(null));
    }
    r.result("distribution", distribution_value(&d));
    r.result("audit", audit_value(&audit));
    if let Some(path) = out {
        write_json(path, &DistributionJson::from_distribution(&d))?;
        r.artifacts.push(path.display().to_string());
    }
    Ok(r)
}

pub fn cmd_audit(_g: &Globals, dist: &Path, cardinality: &str, t: usize, threshold: &str) -> Result<RunReport> {
    let d = read_distribution(dist)?;
    let card = BigUint::parse_bytes(cardinality.as_bytes(), 10).context("cardinality must be a decimal integer")?;
    let mut r = RunReport::new("audit", json!({ "dist": dist.display().to_string(), "cardinality": cardinality, "t": t, "threshold": threshold }));
    let audit = audit_distribution(&d, &card, t, parse_ratio(threshold)?);
    push_audit(&mut r, &audit, None);
    Ok(r)
}

fn push_audit(r: &mut RunReport, a: &AuditReport, singleton: Option<usize>) {
    r.check("audit/sum", a.sum_ok, format!("sum of counts = {}", a.claimed_cardinality), || big(&a.total));
    if let Some(s) = singleton {
        r.check("audit/singleton", a.singleton_bound == Some(s), format!("Singleton bound d <= {s}"), || json!(a.singleton_bound));
    }
    r.check(
        "audit/low-weight",
        a.low_weight_ok,
        format!("|w <= {}| / |C| <= {}/{}", a.low_weight_t, a.low_weight_threshold.0, a.low_weight_threshold.1),
        || big(&a.low_weight_count),
    );
    r.push(
        "audit/macwilliams",
        if a.macwilliams_fixed_point { Status::Pass } else { Status::Finding },
        "distribution is its own MacWilliams transform",
        None,
    );
    r.result("audit", audit_value(a));
}

/// The self-dual length-11 cyclic code built from the printed factorization.
pub fn example1_code(seed: u64) -> Result<(CyclicCodeR, bool)> {
    let factors = factor_xn_minus_1_seeded(11, seed)?;
    let f = PolyZ9::from_ints(&[-1, 2, 1, 8, 3, 1]);
    let printed = [PolyZ9::from_ints(&[-1, 1]), f.clone(), PolyZ9::from_ints(&[-1, -3, 1, -1, -2, 1])];
    let reproduced = printed.iter().all(|p| factors.contains(p));
    let f_star = f.reciprocal()?;
    let comp = CyclicCodeZ9::new(11, f_star, PolyZ9::from_ints(&[-1, 1]), f)?;
    Ok((CyclicCodeR::new(comp.clone(), comp)?, reproduced))
}

fn example1_printed_matrix() -> LinearCodeZ9 {
    let mut rows: Vec<Row> = (0..5)
        .map(|s| {
            let mut r = vec![Z9::ZERO; 11];
            for (j, &x) in [1, 2, 5, 2, 1, 6, 1].iter().enumerate() {
                r[s + j] = Z9::new(x);
            }
            r
        })
        .collect();
    rows.push(vec![Z9::new(6); 11]);
    LinearCodeZ9::from_rows(11, rows)
}

pub fn cmd_example1(g: &Globals, matrix: Option<&str>, sweep_check: bool) -> Result<RunReport> {
    let a = match matrix {
        Some(m) => parse_gray_matrix(m)?,
        None => GrayMatrix::default(),
    };
    let mut r = RunReport::new("example1", json!({ "matrix": matrix, "sweep_check": sweep_check }));
    let (code, reproduced) = example1_code(g.seed)?;
    r.check("factorization", reproduced, "printed factors of X^11 - 1 are reproduced", || json!(null));
    let lin = code.to_linear();
    r.check("generator", lin.c1() == &example1_printed_matrix(), "component equals the span of the printed 6-row matrix", || json!(null));
    r.check("self-dual/criterion", code.lemma3_self_dual(), "f = h* and g = g* on both components", || json!(null));
    r.check("self-dual/linear-algebra", lin.is_self_dual(), "C = C^⊥ by canonical forms", || json!(null));
    r.check(
        "size",
        lin.c1().enumerate(DEFAULT_BUDGET)?.count() == 177147,
        "component has 177147 codewords",
        || json!(lin.c1().cardinality().to_string()),
    );
    let d = gray_distribution_fast(&lin, &a, DEFAULT_BUDGET)?;
    let table = fixtures::example1_table()?;
    r.check("distribution", d == table, "Gray distribution matches the published length-22 table", || {
        first_difference(&d, &table).unwrap_or(Value::Null)
    });
    r.check("min-weight", d.min_weight() == Some(5), "minimum Hamming weight 5", || json!(d.min_weight()));
    let audit = audit_distribution(&d, &pow9(11), 0, (1, 1));
    r.check("sum", audit.sum_ok, "sum = 9^11", || big(&audit.total));
    r.check("macwilliams", audit.macwilliams_fixed_point, "self-dual image is a MacWilliams fixed point", || json!(null));
    r.result("distribution", distribution_value(&d));
    if sweep_check {
        let mut bad = None;
        for n in [2usize, 4, 5] {
            for comp in all_cyclic_z9(n)? {
                let c = comp.to_linear();
                if c.cardinality_u128().is_some_and(|s| s * s <= 1 << 22) {
                    let rc = LinearCodeR::new(c.clone(), c)?;
                    let fast = gray_distribution_fast(&rc, &a, DEFAULT_BUDGET)?;
                    let plan = SweepPlan::new(&rc, &a, u128::MAX)?;
                    if parallel_sweep(&plan, g.threads, false) != fast {
                        bad = Some(triple_value(&comp));
                    }
                }
            }
        }
        r.check("fast-vs-sweep", bad.is_none(), "fast path equals the sweep on cyclic codes of length 2, 4, 5", || json!(bad));
    }
    Ok(r)
}

/// Compares the `E_i` components with the printed `G11`, `G12`.
fn structure_checks(r: &mut RunReport, family: &QrFamily, gens: &Generators) {
    let g11 = Generators::code(&gens.g11);
    let g12 = Generators::code(&gens.g12);
    let cases = [
        ("G11", family.e1.c1(), &g11),
        ("G12", family.e1.c2(), &g12),
        ("G21=G12", family.e2.c1(), &g12),
        ("G22=G11", family.e2.c2(), &g11),
    ];
    for (name, comp, printed) in cases {
        let stray = printed.standard_form().iter().find(|row| !comp.contains(row)).cloned();
        r.check(format!("structure/{name}"), comp == printed, format!("component equals the row space of {name}"), || {
            json!({ "printed_row_not_in_code": stray.as_deref().map(z9_word) })
        });
    }
}

/// Which extension variant produced a distribution equal to the table.
#[derive(Clone, Debug)]
pub struct VariantMatch {
    pub variant: ExtensionVariant,
    pub distribution: WeightDistribution,
    pub matches: bool,
    pub self_dual: bool,
}

pub fn sweep_variant(g: &Globals, family: &QrFamily, variant: ExtensionVariant, table: &WeightDistribution) -> Result<VariantMatch> {
    let ext = qr::extend(family, 1, variant)?;
    let plan = SweepPlan::new(&ext.code, &GrayMatrix::default(), u128::MAX)?;
    let d = parallel_sweep(&plan, g.threads, g.progress);
    Ok(VariantMatch { variant, matches: &d == table, self_dual: ext.code.is_self_dual(), distribution: d })
}

pub fn cmd_example2(g: &Globals, full: bool, inject_fault: bool) -> Result<RunReport> {
    let mut r = RunReport::new("example2", json!({ "full": full }));
    let family = qr::build_family(11)?;
    let mut sub = qr_report(11, true, Some("parity"), true)?;
    sub.command = "qr".into();
    r.absorb("qr", sub);
    let mut gens = fixtures::example2_generators()?;
    if inject_fault {
        gens.g11[1][6] = (gens.g11[1][6] + 1) % 9;
    }
    structure_checks(&mut r, &family, &gens);

    let table = fixtures::example2_table()?;
    let audit = audit_distribution(&table, &pow9(12), 12, (28, 10_000_000));
    push_audit(&mut r, &audit, Some(13));
    r.check("table/min-weight", table.min_weight() == Some(9), "table minimum weight 9", || json!(table.min_weight()));

    if full {
        let parity = sweep_variant(g, &family, ExtensionVariant::Parity, &table)?;
        r.result("sweep/parity", distribution_value(&parity.distribution));
        let mut chosen = parity.clone();
        if !parity.matches {
            r.push("sweep/parity", Status::Finding, "parity-extended code does not reproduce the table", first_difference(&parity.distribution, &table));
            let (_, t) = qr::listed_top_row(&family.class);
            let alt = sweep_variant(g, &family, ExtensionVariant::Matrix { corner: Z9::new(7), constant: t }, &table)?;
            r.result("sweep/corner7", distribution_value(&alt.distribution));
            chosen = alt;
        }
        r.check(
            "sweep/table",
            chosen.matches,
            format!("{} extension reproduces the published table", chosen.variant),
            || first_difference(&chosen.distribution, &table).unwrap_or(Value::Null),
        );
        r.result("matching_variant", json!(chosen.matches.then(|| chosen.variant.to_string())));
        if chosen.matches {
            consistency_into(&mut r, "sweep/consistency", &family, chosen.variant, audit.macwilliams_fixed_point)?;
        }
    } else {
        r.push("sweep", Status::Skip, "full pair sweep not requested (--full)", None);
        let rec = fixtures::example2_sweep()?;
        r.check(
            "recorded/table",
            rec.distribution == table,
            format!("stored {} sweep equals the published table", rec.variant),
            || first_difference(&rec.distribution, &table).unwrap_or(Value::Null),
        );
        r.result("matching_variant", json!(rec.variant.to_string()));
        consistency_into(&mut r, "recorded/consistency", &family, rec.variant, audit.macwilliams_fixed_point)?;
    }
    Ok(r)
}

/// Unit `c` such that scaling the added coordinate by `c` carries the code onto its dual.
pub fn dual_by_scaling(ext: &qr::ExtendedCode) -> Option<Z9> {
    let dual = ext.code.dual();
    Z9::all().filter(|c| c.is_unit()).find(|&c| {
        let rows: Vec<Vec<RElement>> = ext
            .generator
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r[0] = r[0] * RElement::scalar(c);
                r
            })
            .collect();
        LinearCodeR::from_r_rows(ext.code.len(), &rows) == dual
    })
}

/// Compares the MacWilliams verdict on the table with the Gram verdict of the
/// extension that produced it.
fn consistency_into(r: &mut RunReport, name: &str, family: &QrFamily, variant: ExtensionVariant, fixed_point: bool) -> Result<()> {
    let ext = qr::extend(family, 1, variant)?;
    let self_dual = ext.code.is_self_dual();
    let scaling = dual_by_scaling(&ext);
    // Scaling the added coordinate by a unit keeps every Gray weight, so each
    // unit corner gives the same distribution as the listed top row.
    let (_, t) = qr::listed_top_row(&family.class);
    let mut twins = Vec::new();
    for c in Z9::all().filter(|c| c.is_unit()) {
        if qr::extend(family, 1, ExtensionVariant::Matrix { corner: c, constant: t })?.code.is_self_dual() {
            twins.push(c.value());
        }
    }
    r.claim(
        name,
        self_dual == fixed_point,
        format!("MacWilliams verdict on the table agrees with the Gram verdict of the {variant} extension"),
        || {
            json!({
                "fixed_point": fixed_point,
                "self_dual": self_dual,
                "dual_is_code_with_coordinate_0_scaled_by": scaling.map(|c| c.value()),
                "self_dual_unit_corners_with_same_distribution": twins,
            })
        },
    );
    r.result("formally_self_dual_scaling", json!(scaling.map(|c| c.value())));
    r.result("self_dual_twins", json!(twins));
    Ok(())
}

fn random_code(rng: &mut ChaCha8Rng, n: usize, max_rows: usize) -> LinearCodeZ9 {
    let k = (rng.next_u32() as usize) % (max_rows + 1);
    let rows = (0..k).map(|_| (0..n).map(|_| Z9::new(i64::from(rng.next_u32() % 9))).collect()).collect();
    LinearCodeZ9::from_rows(n, rows)
}

fn all_r_vectors(n: usize) -> Vec<Vec<RElement>> {
    (0..81usize.pow(n as u32))
        .map(|mut k| {
            (0..n)
                .map(|_| {
                    let e = RElement::from_index(k % 81);
                    k /= 81;
                    e
                })
                .collect()
        })
        .collect()
}

fn ring_suite(r: &mut RunReport) {
    let a = GrayMatrix::default();
    let all: Vec<RElement> = RElement::all().collect();
    let assoc = all.iter().all(|&x| all.iter().all(|&y| all.iter().step_by(7).all(|&z| (x * y) * z == x * (y * z))));
    let distrib = all.iter().all(|&x| all.iter().all(|&y| all.iter().step_by(7).all(|&z| x * (y + z) == x * y + x * z)));
    r.check("ring/axioms", assoc && distrib, "associativity and distributivity over R", || json!(null));
    let units = all.iter().filter(|x| x.is_unit()).count();
    r.check("ring/units", units == 36, "R has 36 units", || json!(units));
    let mut images: Vec<(Z9, Z9)> = all.iter().map(|&x| a.apply(x)).collect();
    images.sort();
    images.dedup();
    r.check("gray/bijective", images.len() == 81, "Gray map is a bijection R -> Z9^2", || json!(images.len()));
    let mut bad = None;
    for &x in &all {
        for &y in &all {
            let d_r = qrz9_core::ring::lee_weight(x - y, &a);
            let (p, q) = a.apply(x);
            let (s, t) = a.apply(y);
            let d_h = usize::from(p != s) + usize::from(q != t);
            if usize::from(d_r) != d_h {
                bad = Some(json!([x.to_string(), y.to_string()]));
            }
        }
    }
    r.check("gray/distance", bad.is_none(), "Lee distance equals Hamming distance of Gray images (all pairs)", || bad.unwrap_or(Value::Null));
    let mut bad = None;
    for &x in &all {
        for &y in &all {
            if (x * y).is_zero() {
                let (p, q) = a.apply(x);
                let (s, t) = a.apply(y);
                if !(p * s + q * t).is_zero() {
                    bad = Some(json!([x.to_string(), y.to_string()]));
                }
            }
        }
    }
    r.check("gray/orthogonality", bad.is_none(), "orthogonal elements have orthogonal images", || bad.unwrap_or(Value::Null));
}

fn duality_suite(r: &mut RunReport, rng: &mut ChaCha8Rng) -> Result<()> {
    let a = GrayMatrix::default();
    let space2 = all_r_vectors(2);
    let mut bad = None;
    for _ in 0..12 {
        let c = LinearCodeR::new(random_code(rng, 2, 2), random_code(rng, 2, 2))?;
        let gens = c.z9_generators();
        let brute: Vec<&Vec<RElement>> = space2.iter().filter(|x| gens.iter().all(|g| dot_r(x, g).is_zero())).collect();
        let d = c.dual();
        let ok = brute.iter().all(|x| d.contains(x)) && BigUint::from(brute.len()) == d.cardinality();
        let gray_ok = d.gray_image(&a) == c.gray_image(&a).dual();
        if !(ok && gray_ok) {
            bad = Some(json!({ "c1": rows_value(c.c1().standard_form()), "c2": rows_value(c.c2().standard_form()) }));
        }
    }
    r.check("duality/length-2", bad.is_none(), "dual_r equals the brute-force dual; Φ(C^⊥) = Φ(C)^⊥", || bad.unwrap_or(Value::Null));
    let mut bad = None;
    for _ in 0..24 {
        let c = LinearCodeR::new(random_code(rng, 3, 3), random_code(rng, 3, 3))?;
        if c.dual().gray_image(&a) != c.gray_image(&a).dual() || c.dual().dual() != c {
            bad = Some(json!({ "c1": rows_value(c.c1().standard_form()), "c2": rows_value(c.c2().standard_form()) }));
        }
    }
    r.check("duality/length-3", bad.is_none(), "Φ(C^⊥) = Φ(C)^⊥ and C^⊥⊥ = C on random codes", || bad.unwrap_or(Value::Null));
    Ok(())
}

fn engine_suite(r: &mut RunReport, rng: &mut ChaCha8Rng) -> Result<()> {
    let a = GrayMatrix::default();
    let mut bad = None;
    for n in 1..=4 {
        for _ in 0..6 {
            let c1 = random_code(rng, n, 2);
            let c = LinearCodeR::new(c1.clone(), c1)?;
            let fast = gray_distribution_fast(&c, &a, DEFAULT_BUDGET)?;
            if engine::gray_distribution_sweep(&c, &a, u128::MAX)? != fast {
                bad = Some(json!({ "c1": rows_value(c.c1().standard_form()) }));
            }
        }
    }
    r.check("engine/fast-vs-sweep", bad.is_none(), "fast path equals the sweep on random codes of length <= 4", || bad.unwrap_or(Value::Null));
    let c = LinearCodeR::new(random_code(rng, 4, 3), random_code(rng, 4, 3))?;
    let plan = SweepPlan::new(&c, &a, u128::MAX)?;
    let base = parallel_sweep(&plan, 1, false);
    let same = [2, 8].iter().all(|&t| parallel_sweep(&plan, t, false) == base);
    r.check("engine/threads", same, "sweep identical for 1, 2 and 8 workers", || json!(null));
    Ok(())
}

fn cyclic_suite(r: &mut RunReport) -> Result<()> {
    for n in [1usize, 2, 5, 11] {
        let sub = cmd_cyclic(&Globals::default(), n, true)?;
        for v in sub.verdicts {
            r.push(format!("cyclic/{n}/{}", v.name), v.status, v.detail, v.witness);
        }
    }
    let expected = [(11, true), (7, false), (13, true)];
    let got: Vec<(usize, bool)> = expected.iter().map(|&(n, _)| (n, self_dual_exists(n))).collect();
    r.check("cyclic/existence", got == expected, "self-dual existence for n = 11, 7, 13", || json!(got));
    Ok(())
}

pub fn cmd_verify_all(g: &Globals, inject_fault: bool) -> Result<RunReport> {
    let start = Instant::now();
    let mut r = RunReport::new("verify-all", json!({ "seed": g.seed, "inject_fault": inject_fault }));
    let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
    ring_suite(&mut r);
    duality_suite(&mut r, &mut rng)?;
    cyclic_suite(&mut r)?;
    for p in [11u64, 13, 23, 37] {
        let sub = qr_report(p, true, Some("parity"), true)?;
        for v in sub.verdicts {
            r.push(format!("qr/{p}/{}", v.name), v.status, v.detail, v.witness);
        }
    }
    engine_suite(&mut r, &mut rng)?;
    let ex1 = cmd_example1(g, None, false)?;
    r.absorb("example1", ex1);
    let family = qr::build_family(11)?;
    let mut gens = fixtures::example2_generators()?;
    if inject_fault {
        gens.g11[1][6] = (gens.g11[1][6] + 1) % 9;
    }
    structure_checks(&mut r, &family, &gens);
    let table = fixtures::example2_table()?;
    let mw = macwilliams(&table, &pow9(12)).map(|m| m == table).unwrap_or(false);
    r.push("example2/macwilliams", if mw { Status::Pass } else { Status::Finding }, "published table is its own MacWilliams transform", None);
    if g.progress {
        eprintln!("verify-all finished in {:.1}s", start.elapsed().as_secs_f64());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_parsing() {
        assert_eq!(parse_ratio("2.8e-6").unwrap(), (28, 10_000_000));
        assert_eq!(parse_ratio("0.5").unwrap(), (5, 10));
        assert_eq!(parse_ratio("3/7").unwrap(), (3, 7));
        assert_eq!(parse_ratio("2e3").unwrap(), (2000, 1));
        assert!(parse_ratio("x").is_err());
    }

    #[test]
    fn gray_matrix_parsing() {
        assert!(parse_gray_matrix("1,1,-1,1").unwrap().is_default());
        assert!(parse_gray_matrix("1,1,1,1").is_err());
        assert!(parse_gray_matrix("1,1").is_err());
    }

    #[test]
    fn extension_arguments() {
        let f = qr::build_family(11).unwrap();
        assert_eq!(resolve_extension(&f, "parity").unwrap(), ExtensionVariant::Parity);
        assert_eq!(
            resolve_extension(&f, "matrix").unwrap(),
            ExtensionVariant::Matrix { corner: Z9::new(8), constant: Z9::new(5) }
        );
        assert_eq!(
            resolve_extension(&f, "matrix:7,5").unwrap(),
            ExtensionVariant::Matrix { corner: Z9::new(7), constant: Z9::new(5) }
        );
        assert!(resolve_extension(&f, "bogus").is_err());
    }

    #[test]
    fn factor_report() {
        let r = cmd_factor(&Globals::default(), 11).unwrap();
        assert!(!r.has_fail());
        assert_eq!(r.results["r"], json!(3));
        assert_eq!(r.results["cyclic_codes_r"], json!("729"));
    }
}
