//! Quadratic residue codes over `R` of prime length `p = +-1 (mod 12)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::codes_r::{dot_r, LinearCodeR};
use crate::cyclic::{ideal_code, ideal_code_r};
use crate::error::Error;
use crate::linear::{LinearCodeZ9, Row};
use crate::poly::{PolyR, PolyZ9, QrContext};
use crate::ring::{RElement, Z9};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QrCase {
    /// `p = 12r - 1`
    I,
    /// `p = 12r + 1`
    II,
}

impl fmt::Display for QrCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QrCase::I => "I",
            QrCase::II => "II",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub p: u64,
    pub case: QrCase,
    pub r: u64,
    pub r_mod3: u8,
}

pub fn classify(p: u64) -> Result<Classification, Error> {
    QrContext::new(p)?;
    let (case, r) = if p % 12 == 11 { (QrCase::I, (p + 1) / 12) } else { (QrCase::II, (p - 1) / 12) };
    Ok(Classification { p, case, r, r_mod3: (r % 3) as u8 })
}

/// `c + q*Q(X) + m*N(X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Template {
    pub c: Z9,
    pub q: Z9,
    pub m: Z9,
}

impl Template {
    pub const fn new(c: i64, q: i64, m: i64) -> Template {
        Template { c: Z9::new(c), q: Z9::new(q), m: Z9::new(m) }
    }

    /// `c + k*J(X)`.
    pub const fn with_j(c: i64, k: i64) -> Template {
        Template::new(c + k, k, k)
    }

    pub fn instantiate(&self, ctx: &QrContext) -> PolyZ9 {
        ctx.combination(self.c, self.q, self.m)
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}Q+{}N", self.c, self.q, self.m)
    }
}

/// A listed idempotent candidate with its printed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub label: &'static str,
    pub template: Template,
}

const fn entry(label: &'static str, template: Template) -> TableEntry {
    TableEntry { label, template }
}

/// The six listed candidates for a case and residue class of `r`, as printed.
pub fn idempotent_table(case: QrCase, r_mod3: u8) -> Result<[TableEntry; 6], Error> {
    use Template as T;
    Ok(match (case, r_mod3) {
        (QrCase::I, 0) => [
            entry("8Q", T::new(0, 8, 0)),
            entry("8N", T::new(0, 0, 8)),
            entry("8J", T::with_j(0, 8)),
            entry("1+Q", T::new(1, 1, 0)),
            entry("1+N", T::new(1, 0, 1)),
            entry("1+2J", T::with_j(1, 2)),
        ],
        (QrCase::I, 1) => [
            entry("3+6Q+8N", T::new(3, 6, 8)),
            entry("3+6N+8Q", T::new(3, 8, 6)),
            entry("7+Q+3N", T::new(7, 1, 3)),
            entry("7+N+3Q", T::new(7, 3, 1)),
            entry("5J", T::with_j(0, 5)),
            entry("1+5J", T::with_j(1, 5)),
        ],
        (QrCase::I, 2) => [
            entry("6+3Q+8N", T::new(6, 3, 8)),
            entry("6+3N+8Q", T::new(6, 8, 3)),
            entry("4+Q+6N", T::new(4, 1, 6)),
            entry("4+N+6Q", T::new(4, 6, 1)),
            entry("2J", T::with_j(0, 2)),
            entry("8+8J", T::with_j(8, 8)),
        ],
        (QrCase::II, 0) => [
            entry("1+Q", T::new(1, 1, 0)),
            entry("1+N", T::new(1, 0, 1)),
            entry("8Q", T::new(0, 8, 0)),
            entry("8N", T::new(0, 0, 8)),
            entry("J", T::with_j(0, 1)),
            entry("1+J", T::with_j(1, 1)),
        ],
        (QrCase::II, 1) => [
            entry("4+Q+6N", T::new(4, 1, 6)),
            entry("4+N+6Q", T::new(4, 6, 1)),
            entry("6+3Q+8N", T::new(6, 3, 8)),
            entry("6+3N+8Q", T::new(6, 8, 3)),
            entry("7J", T::with_j(0, 7)),
            entry("1+2J", T::with_j(1, 2)),
        ],
        (QrCase::II, 2) => [
            entry("7+Q+3N", T::new(7, 1, 3)),
            entry("7+N+3Q", T::new(7, 3, 1)),
            entry("3+6Q+8N", T::new(3, 6, 8)),
            entry("3+6N+8Q", T::new(3, 8, 6)),
            entry("4J", T::with_j(0, 4)),
            entry("1+5J", T::with_j(1, 5)),
        ],
        _ => return Err(Error::InvalidVariant("r mod 3 must be 0, 1 or 2")),
    })
}

/// Checks `e^2 = e` for every listed candidate of the class of `p`.
pub fn check_table(p: u64) -> Result<Vec<(TableEntry, bool)>, Error> {
    let class = classify(p)?;
    let ctx = QrContext::new(p)?;
    Ok(idempotent_table(class.case, class.r_mod3)?
        .into_iter()
        .map(|e| {
            let poly = e.template.instantiate(&ctx);
            let ok = &poly * &poly == poly;
            (e, ok)
        })
        .collect())
}

/// `(u-part, (1-u)-part)` templates for `D1` and `E1`; `D2`, `E2` swap the parts.
fn definition(case: QrCase, r_mod3: u8) -> [(Template, Template); 2] {
    use Template as T;
    match (case, r_mod3) {
        (QrCase::I, 0) => [(T::new(0, 8, 0), T::new(0, 0, 8)), (T::new(1, 0, 1), T::new(1, 1, 0))],
        (QrCase::I, 1) => [(T::new(3, 6, 8), T::new(3, 8, 6)), (T::new(7, 1, 3), T::new(7, 3, 1))],
        (QrCase::I, _) => [(T::new(6, 3, 8), T::new(6, 8, 3)), (T::new(4, 1, 6), T::new(4, 6, 1))],
        (QrCase::II, 0) => [(T::new(1, 1, 0), T::new(1, 0, 1)), (T::new(0, 0, 8), T::new(0, 8, 0))],
        (QrCase::II, 1) => [(T::new(4, 1, 6), T::new(4, 6, 1)), (T::new(6, 3, 8), T::new(6, 8, 3))],
        (QrCase::II, _) => [(T::new(7, 1, 3), T::new(7, 3, 1)), (T::new(3, 6, 8), T::new(3, 8, 6))],
    }
}

/// Candidate scalars `c` with `K = c*J`.
pub fn k_candidates(case: QrCase) -> [Z9; 3] {
    match case {
        QrCase::I => [Z9::new(2), Z9::new(5), Z9::new(8)],
        QrCase::II => [Z9::new(1), Z9::new(4), Z9::new(7)],
    }
}

#[derive(Clone, Debug)]
pub struct QrFamily {
    pub class: Classification,
    pub ctx: QrContext,
    pub e_d1: PolyR,
    pub e_d2: PolyR,
    pub e_e1: PolyR,
    pub e_e2: PolyR,
    pub d1: LinearCodeR,
    pub d2: LinearCodeR,
    pub e1: LinearCodeR,
    pub e2: LinearCodeR,
    /// `u`-part of `e_d1 * e_d2`.
    pub k: PolyZ9,
}

impl QrFamily {
    pub fn p(&self) -> usize {
        self.class.p as usize
    }

    pub fn d(&self, i: u8) -> &LinearCodeR {
        if i == 1 { &self.d1 } else { &self.d2 }
    }

    pub fn e(&self, i: u8) -> &LinearCodeR {
        if i == 1 { &self.e1 } else { &self.e2 }
    }

    pub fn k_code(&self) -> LinearCodeR {
        ideal_code_r(&PolyR::diagonal(self.k.clone()), self.p())
    }
}

pub fn build_family(p: u64) -> Result<QrFamily, Error> {
    let class = classify(p)?;
    let ctx = QrContext::new(p)?;
    let [d, e] = definition(class.case, class.r_mod3);
    let make = |(x, y): (Template, Template)| PolyR::new(x.instantiate(&ctx), y.instantiate(&ctx));
    let e_d1 = make(d);
    let e_d2 = make((d.1, d.0));
    let e_e1 = make(e);
    let e_e2 = make((e.1, e.0));
    for idem in [&e_d1, &e_d2, &e_e1, &e_e2] {
        if !idem.is_idempotent() {
            return Err(Error::NotIdempotent(format!("{idem}")));
        }
    }
    let n = p as usize;
    let k = (&e_d1 * &e_d2).a;
    Ok(QrFamily {
        d1: ideal_code_r(&e_d1, n),
        d2: ideal_code_r(&e_d2, n),
        e1: ideal_code_r(&e_e1, n),
        e2: ideal_code_r(&e_e2, n),
        class,
        ctx,
        e_d1,
        e_d2,
        e_e1,
        e_e2,
        k,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KReport {
    pub product: PolyR,
    /// `c` with `product = c*J` in both components, if any.
    pub scalar: Option<Z9>,
    pub in_candidates: bool,
    pub generates_intersection: bool,
}

pub fn determine_k(family: &QrFamily) -> Result<KReport, Error> {
    let product = &family.e_d1 * &family.e_d2;
    let j = family.ctx.j_poly();
    let scalar = (product.a == product.b)
        .then(|| Z9::all().find(|&c| j.scale(c) == product.a))
        .flatten();
    let in_candidates = scalar.is_some_and(|c| k_candidates(family.class.case).contains(&c));
    let generates_intersection = ideal_code_r(&product, family.p()) == family.d1.intersect(&family.d2)?;
    Ok(KReport { product, scalar, in_candidates, generates_intersection })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub item: &'static str,
    pub claim: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub p: u64,
    pub case: QrCase,
    pub verdicts: Vec<Verdict>,
}

impl PropertyReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

fn row_str(r: &[Z9]) -> String {
    let parts: Vec<String> = r.iter().map(|x| format!("{x}")).collect();
    format!("[{}]", parts.join(","))
}

fn z9_witness(x: &LinearCodeZ9, y: &LinearCodeZ9) -> Option<String> {
    if let Some(r) = x.standard_form().iter().find(|r| !y.contains(r)) {
        return Some(format!("{} in left only", row_str(r)));
    }
    y.standard_form().iter().find(|r| !x.contains(r)).map(|r| format!("{} in right only", row_str(r)))
}

/// A generator row in exactly one of the two codes, with its CRT component.
pub fn code_witness(x: &LinearCodeR, y: &LinearCodeR) -> Option<String> {
    if let Some(w) = z9_witness(x.c1(), y.c1()) {
        return Some(format!("u-component: {w}"));
    }
    z9_witness(x.c2(), y.c2()).map(|w| format!("(1-u)-component: {w}"))
}

fn equality(item: &'static str, claim: String, x: &LinearCodeR, y: &LinearCodeR) -> Verdict {
    let witness = code_witness(x, y);
    Verdict { item, claim, pass: witness.is_none(), witness }
}

fn combine(item: &'static str, claim: String, parts: Vec<Verdict>) -> Verdict {
    let failed = parts.into_iter().find(|v| !v.pass);
    Verdict { item, claim, pass: failed.is_none(), witness: failed.map(|v| format!("{}: {}", v.claim, v.witness.unwrap_or_default())) }
}

fn mu(code: &LinearCodeR, a: u64, p: usize) -> LinearCodeR {
    let perm: Vec<usize> = (0..p).map(|i| (i * a as usize) % p).collect();
    code.permute(&perm)
}

/// The six structural properties, checked by exact linear algebra.
pub fn verify_theorem(family: &QrFamily) -> Result<PropertyReport, Error> {
    let p = family.p();
    let f = family;
    let k_code = f.k_code();
    let mut verdicts = Vec::new();

    let mut mu_parts = Vec::new();
    for &a in f.ctx.residues.iter().chain(&f.ctx.non_residues) {
        let res = f.ctx.is_residue(a);
        let (t1, t2, s1, s2) = if res { (&f.d1, &f.d2, &f.e1, &f.e2) } else { (&f.d2, &f.d1, &f.e2, &f.e1) };
        mu_parts.push(equality("i", format!("D1 mu_{a}"), &mu(&f.d1, a, p), t1));
        mu_parts.push(equality("i", format!("D2 mu_{a}"), &mu(&f.d2, a, p), t2));
        mu_parts.push(equality("i", format!("E1 mu_{a}"), &mu(&f.e1, a, p), s1));
        mu_parts.push(equality("i", format!("E2 mu_{a}"), &mu(&f.e2, a, p), s2));
    }
    verdicts.push(combine("i", "residues fix, non-residues swap".into(), mu_parts));

    verdicts.push(combine(
        "ii",
        "D1 ∩ D2 = (K), D1 + D2 = R_p".into(),
        vec![
            equality("ii", "D1 ∩ D2 = (K)".into(), &f.d1.intersect(&f.d2)?, &k_code),
            equality("ii", "D1 + D2 = R_p".into(), &f.d1.sum(&f.d2)?, &LinearCodeR::full(p)),
        ],
    ));

    verdicts.push(combine(
        "iii",
        "E1 ∩ E2 = 0, E1 + E2 = (K)^⊥".into(),
        vec![
            equality("iii", "E1 ∩ E2 = 0".into(), &f.e1.intersect(&f.e2)?, &LinearCodeR::zero(p)),
            equality("iii", "E1 + E2 = (K)^⊥".into(), &f.e1.sum(&f.e2)?, &k_code.dual()),
        ],
    ));

    let big = 2 * (p + 1);
    let small = 2 * (p - 1);
    let sizes = [
        ("D1", f.d1.log3_cardinality(), big),
        ("D2", f.d2.log3_cardinality(), big),
        ("E1", f.e1.log3_cardinality(), small),
        ("E2", f.e2.log3_cardinality(), small),
    ];
    let bad = sizes.iter().find(|(_, got, want)| got != want);
    verdicts.push(Verdict {
        item: "iv",
        claim: format!("|D_i| = 9^{}, |E_i| = 9^{}", p + 1, p - 1),
        pass: bad.is_none(),
        witness: bad.map(|(name, got, want)| format!("log3 |{name}| = {got}, expected {want}")),
    });

    verdicts.push(combine(
        "v",
        "D_i = E_i + (K)".into(),
        vec![
            equality("v", "D1 = E1 + (K)".into(), &f.d1, &f.e1.sum(&k_code)?),
            equality("v", "D2 = E2 + (K)".into(), &f.d2, &f.e2.sum(&k_code)?),
        ],
    ));

    let vi = match f.class.case {
        QrCase::I => {
            let so = [f.e1.is_self_orthogonal(), f.e2.is_self_orthogonal()];
            let mut parts = vec![
                equality("vi", "E1^⊥ = D1".into(), &f.e1.dual(), &f.d1),
                equality("vi", "E2^⊥ = D2".into(), &f.e2.dual(), &f.d2),
            ];
            for (i, ok) in so.iter().enumerate() {
                parts.push(Verdict {
                    item: "vi",
                    claim: format!("E{} self-orthogonal", i + 1),
                    pass: *ok,
                    witness: (!ok).then(|| String::from("nonzero Gram entry")),
                });
            }
            combine("vi", "E_i self-orthogonal, E_i^⊥ = D_i".into(), parts)
        }
        QrCase::II => combine(
            "vi",
            "E1^⊥ = D2, E2^⊥ = D1".into(),
            vec![
                equality("vi", "E1^⊥ = D2".into(), &f.e1.dual(), &f.d2),
                equality("vi", "E2^⊥ = D1".into(), &f.e2.dual(), &f.d1),
            ],
        ),
    };
    verdicts.push(vi);
    Ok(PropertyReport { p: f.class.p, case: f.class.case, verdicts })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionVariant {
    /// `c_inf = -(c_0 + ... + c_{p-1})`.
    Parity,
    /// Top row `(corner, t, ..., t)` over `(0 | E_i)`.
    Matrix { corner: Z9, constant: Z9 },
    /// Top row of ones over `(0 | E_i)`; case II only.
    AllOnes,
}

impl fmt::Display for ExtensionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtensionVariant::Parity => f.write_str("parity"),
            ExtensionVariant::Matrix { corner, constant } => write!(f, "matrix({corner},{constant})"),
            ExtensionVariant::AllOnes => f.write_str("all-ones"),
        }
    }
}

/// Extended code of length `p + 1`; coordinate 0 is the added one.
#[derive(Clone, Debug)]
pub struct ExtendedCode {
    pub base: u8,
    pub variant: ExtensionVariant,
    pub generator: Vec<Vec<RElement>>,
    pub code: LinearCodeR,
}

/// `(corner, constant)` of the top row for the class of `p`.
pub fn listed_top_row(class: &Classification) -> (Z9, Z9) {
    let t = match (class.case, class.r_mod3) {
        (QrCase::I, 0) => 8,
        (QrCase::I, 1) => 5,
        (QrCase::I, _) => 2,
        (QrCase::II, 0) => 1,
        (QrCase::II, 1) => 7,
        (QrCase::II, _) => 4,
    };
    (Z9::new(8), Z9::new(t))
}

/// `corner^2 + p*t^2` as an integer, from the top row alone.
pub fn top_row_self_product(p: u64) -> Result<(u64, Z9), Error> {
    let (c, t) = listed_top_row(&classify(p)?);
    let v = u64::from(c.value()).pow(2) + p * u64::from(t.value()).pow(2);
    Ok((v, Z9::new((v % 9) as i64)))
}

pub fn extend(family: &QrFamily, i: u8, variant: ExtensionVariant) -> Result<ExtendedCode, Error> {
    if i != 1 && i != 2 {
        return Err(Error::InvalidVariant("base index must be 1 or 2"));
    }
    let p = family.p();
    let generator: Vec<Vec<RElement>> = match variant {
        ExtensionVariant::Parity => family
            .d(i)
            .z9_generators()
            .into_iter()
            .map(|g| {
                let s = g.iter().fold(RElement::ZERO, |acc, &x| acc + x);
                let mut row = vec![-s];
                row.extend(g);
                row
            })
            .collect(),
        ExtensionVariant::Matrix { .. } | ExtensionVariant::AllOnes => {
            let (corner, t) = match variant {
                ExtensionVariant::Matrix { corner, constant } => (corner, constant),
                _ if family.class.case == QrCase::II => (Z9::ONE, Z9::ONE),
                _ => return Err(Error::InvalidVariant("the all-ones extension is defined for p = 1 (mod 12) only")),
            };
            let mut top = vec![RElement::scalar(corner)];
            top.extend(core::iter::repeat_n(RElement::scalar(t), p));
            let mut rows = vec![top];
            for g in family.e(i).z9_generators() {
                let mut row = vec![RElement::ZERO];
                row.extend(g);
                rows.push(row);
            }
            rows
        }
    };
    let code = LinearCodeR::from_r_rows(p + 1, &generator);
    Ok(ExtendedCode { base: i, variant, generator, code })
}

/// Gram matrix over `R` of a list of rows.
pub fn gram_r(rows: &[Vec<RElement>]) -> Vec<Vec<RElement>> {
    rows.iter().map(|x| rows.iter().map(|y| dot_r(x, y)).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerResult {
    pub corner: Z9,
    /// `corner^2 + p*t^2` before reduction.
    pub self_product_int: u64,
    pub self_product: Z9,
    pub self_orthogonal: bool,
    pub self_dual: bool,
}

#[derive(Clone, Debug)]
pub struct Theorem7Report {
    pub p: u64,
    pub case: QrCase,
    pub top_row: (Z9, Z9),
    pub top_self_product_int: u64,
    pub top_self_product: Z9,
    /// Gram matrix of the top row over the `E_1` rows.
    pub gram: Vec<Vec<RElement>>,
    /// Parity extension equals the matrix extension with the listed top row, for `i = 1, 2`.
    pub parity_equals_matrix: [bool; 2],
    /// Self-duality of the parity extensions.
    pub parity_self_dual: [bool; 2],
    pub witness: Option<String>,
    /// Case I only: every corner with the listed constant.
    pub corner_search: Vec<CornerResult>,
    /// Case II only: `dual(D^_1) = D~_2` and `dual(D^_2) = D~_1`.
    pub crosswise: Option<[bool; 2]>,
}

impl Theorem7Report {
    /// Whether the claim holds for this prime.
    pub fn claim_holds(&self) -> bool {
        match self.case {
            QrCase::I => self.parity_self_dual == [true, true],
            QrCase::II => self.crosswise == Some([true, true]),
        }
    }

    pub fn self_dual_corners(&self) -> Vec<Z9> {
        self.corner_search.iter().filter(|c| c.self_dual).map(|c| c.corner).collect()
    }
}

pub fn adjudicate_theorem7(family: &QrFamily) -> Result<Theorem7Report, Error> {
    let p = family.class.p;
    let (corner, t) = listed_top_row(&family.class);
    let listed = ExtensionVariant::Matrix { corner, constant: t };
    let m1 = extend(family, 1, listed)?;
    let gram = gram_r(&m1.generator);
    let (top_int, top) = top_row_self_product(p)?;

    let mut parity_equals_matrix = [false; 2];
    let mut parity_self_dual = [false; 2];
    let mut parity = Vec::new();
    for i in [1u8, 2] {
        let par = extend(family, i, ExtensionVariant::Parity)?;
        let mat = extend(family, i, listed)?;
        parity_equals_matrix[i as usize - 1] = par.code == mat.code;
        parity_self_dual[i as usize - 1] = par.code.is_self_dual();
        parity.push(par);
    }

    let witness = (0..gram.len())
        .flat_map(|a| (a..gram.len()).map(move |b| (a, b)))
        .find(|&(a, b)| !gram[a][b].is_zero())
        .map(|(a, b)| {
            if a == 0 && b == 0 {
                format!("row 0 = ({corner},{t},...,{t}) has self-product {top_int} = {} (mod 9)", gram[0][0])
            } else {
                format!("Gram entry ({a},{b}) = {}", gram[a][b])
            }
        });

    let mut corner_search = Vec::new();
    let mut crosswise = None;
    match family.class.case {
        QrCase::I => {
            for c in Z9::all() {
                let ext = extend(family, 1, ExtensionVariant::Matrix { corner: c, constant: t })?;
                let v = u64::from(c.value()).pow(2) + p * u64::from(t.value()).pow(2);
                corner_search.push(CornerResult {
                    corner: c,
                    self_product_int: v,
                    self_product: Z9::new((v % 9) as i64),
                    self_orthogonal: ext.code.is_self_orthogonal(),
                    self_dual: ext.code.is_self_dual(),
                });
            }
        }
        QrCase::II => {
            let tilde1 = extend(family, 1, ExtensionVariant::AllOnes)?;
            let tilde2 = extend(family, 2, ExtensionVariant::AllOnes)?;
            crosswise = Some([parity[0].code.dual() == tilde2.code, parity[1].code.dual() == tilde1.code]);
        }
    }

    Ok(Theorem7Report {
        p,
        case: family.class.case,
        top_row: (corner, t),
        top_self_product_int: top_int,
        top_self_product: top,
        gram,
        parity_equals_matrix,
        parity_self_dual,
        witness,
        corner_search,
        crosswise,
    })
}

/// Rows of a `Z9` code's canonical generator, for comparison with printed matrices.
pub fn component_rows(code: &LinearCodeZ9) -> Vec<Row> {
    code.standard_form().to_vec()
}

/// `Z9` code generated by a printed integer matrix.
pub fn code_from_matrix(rows: &[&[i64]]) -> LinearCodeZ9 {
    LinearCodeZ9::from_int_rows(rows)
}

/// The ideal `(e)` of a single component, exposed for reports.
pub fn component_ideal(e: &PolyZ9, p: usize) -> LinearCodeZ9 {
    ideal_code(e, p)
}
