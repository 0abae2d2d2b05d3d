//! Verification suites: each module's identities as named exact checks.
//!
//! Random inputs come from a fixed-seed ChaCha8 stream, so two runs give
//! identical reports.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braids::{
    electron, embed_su3, photon, positron, rho, rho_relation_checks, verify_factorization, BraidAlgebraElement,
    BraidWord, FramedBraid, FramingReading,
};
use crate::check::{all_pass, Check};
use crate::error::{AlgebraError, Result};
use crate::groups::{builtin_group, Perm};
use crate::iterants::{Iterant, Matrix};
use crate::physics::{
    c2, expected_char_poly, fermion_ops, iota_to_klein_identification, majorana_pair, minkowski_observable,
    monomial_rank, parafermion_iterants, parafermion_pair, pauli_ops, quaternions_iota, quaternions_klein,
    quaternions_signed_perm, realify, two_level_bindings, ProjectorBasis,
};
use crate::scalars::CyclotomicField;
use crate::su3::{
    c3_ab, cartan_weyl_checks, derive_structure_constants, gell_mann, radical_reading, structure_checks,
    transposition_checks,
};
use crate::{sample, Cyclotomic};

type It = Iterant<Cyclotomic>;
type M = Matrix<Cyclotomic>;

/// Suite names accepted by [`run_suite`]; `n` is any order `≥ 2`.
pub const SUITES: &[&str] =
    &["core", "matrix-iso", "quaternions", "fermion", "majorana", "parafermion:n", "su3", "braids"];

/// Seed of the random stream behind every sampled check.
pub const SEED: u64 = 0x1d3a_7e57;

/// Random pairs per sampled identity.
pub const SAMPLES: usize = 100;

/// A computed quantity reported alongside the checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedValue {
    pub name: String,
    pub exact: String,
    pub decimal: Option<String>,
}

impl DerivedValue {
    fn scalar(name: impl Into<String>, x: &Cyclotomic) -> Self {
        DerivedValue { name: name.into(), exact: x.to_string(), decimal: Some(x.to_decimal_string()) }
    }

    fn text(name: impl Into<String>, value: impl Into<String>) -> Self {
        DerivedValue { name: name.into(), exact: value.into(), decimal: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<Check>,
    pub derived: Vec<DerivedValue>,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<Check>, derived: Vec<DerivedValue>) -> Self {
        SuiteReport { suite: suite.to_string(), pass: all_pass(&checks), checks, derived }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Runs a suite by name (see [`SUITES`]).
pub fn run_suite(name: &str) -> Result<SuiteReport> {
    let key = name.trim().to_lowercase();
    match key.as_str() {
        "core" => core(),
        "matrix-iso" => matrix_iso(),
        "quaternions" => quaternions(),
        "fermion" => fermion(),
        "majorana" => majorana(),
        "su3" => su3(),
        "braids" => braids(),
        _ => match key.strip_prefix("parafermion:").and_then(|n| n.parse::<u32>().ok()) {
            Some(n) => parafermion(n),
            None => Err(AlgebraError::UnknownSuite { name: name.to_string(), known: SUITES.join(", ") }),
        },
    }
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED)
}

fn ints(xs: &[i64]) -> Vec<Cyclotomic> {
    xs.iter().map(|&x| Cyclotomic::from(x)).collect()
}

/// One check over many samples; the detail names the first counterexample.
fn sampled(name: impl Into<String>, count: usize, mut trial: impl FnMut() -> Result<Option<String>>) -> Check {
    let name = name.into();
    for k in 0..count {
        match trial() {
            Ok(None) => {}
            Ok(Some(witness)) => return Check::new(name, false, format!("sample {k}: {witness}")),
            Err(e) => return Check::failed(name, e),
        }
    }
    Check::new(name, true, format!("{count} samples"))
}

fn differ<T: PartialEq + std::fmt::Display>(lhs: &T, rhs: &T) -> Option<String> {
    (lhs != rhs).then(|| format!("lhs = {lhs}; rhs = {rhs}"))
}

fn core() -> Result<SuiteReport> {
    let field = CyclotomicField::new(12)?;
    let g = c2();
    let h = g.find("h").expect("C2 has h");
    let minus_one = It::scalar(&g, Cyclotomic::from(-1));
    let one = It::one(&g);
    let eps = It::vector(&g, ints(&[1, -1]))?;
    let eta = It::element(&g, h);
    let i_it = It::monomial(&g, ints(&[1, -1]), h)?;
    let e1 = It::basic_idempotent(&g, 1)?;
    let e2 = It::basic_idempotent(&g, 2)?;
    let mut checks = vec![
        Check::equal("([1,-1]h)^2 = -1", &(&i_it * &i_it), &minus_one),
        Check::equal("e^2 = 1", &(&eps * &eps), &one),
        Check::equal("h^2 = 1", &(&eta * &eta), &one),
        Check::equal("e h = -h e", &(&eps * &eta), &(&eta * &eps).neg()),
        Check::equal("e1 + e2 = 1", &(&e1 + &e2), &one),
        Check::equal("e1^2 = e1", &(&e1 * &e1), &e1),
        Check::equal("e1 e2 = 0", &(&e1 * &e2), &It::zero(&g)),
    ];

    let s = Perm::from_cycles(4, &[&[1, 2], &[3, 4]])?;
    let l = Perm::from_cycles(4, &[&[1, 3], &[2, 4]])?;
    checks.push(Check::equal("(12)(34) (13)(24) = (14)(23)", &s.compose(&l)?, &Perm::from_cycles(4, &[&[1, 4], &[2, 3]])?));

    let c3 = Arc::new(builtin_group("C3")?);
    let lemma = M::from_ints(&[&[1, 4, 7], &[8, 2, 5], &[6, 9, 3]]);
    checks.push(Check::equal(
        "3x3 matrix = [a,b,c] + [d,e,f]S + [g,h,k]S^2",
        &Iterant::from_matrix(&lemma, &c3)?.to_string(),
        &"[1,2,3] + [4,5,6]S + [7,8,9]S^2".to_string(),
    ));
    let c6 = Arc::new(builtin_group("C6")?);
    let s3 = It::element(&c6, c6.find("S^3").expect("C6 has S^3"));
    checks.push(Check::equal(
        "from_matrix(M(S^3)) = [1,1,1,1,1,1]S^3",
        &Iterant::from_matrix(&s3.to_matrix(), &c6)?,
        &s3,
    ));

    let mut r = rng();
    checks.push(sampled("D(ZW) = D(Z) D(W)", SAMPLES, || {
        let z = sample::iterant(&mut r, &g, &field, 3);
        let w = sample::iterant(&mut r, &g, &field, 3);
        Ok(differ(&(&z * &w).det2()?, &(&z.det2()? * &w.det2()?)))
    }));
    let mut r = rng();
    checks.push(sampled("Z conj(Z) = conj(Z) Z = D(Z)", SAMPLES, || {
        let z = sample::iterant(&mut r, &g, &field, 3);
        let zb = z.conj2()?;
        let d = It::scalar(&g, z.det2()?);
        Ok(differ(&(&z * &zb), &(&zb * &z)).or_else(|| differ(&(&z * &zb), &d)))
    }));
    let mut r = rng();
    checks.push(sampled("Minkowski: D(H) = T^2 - X^2 - Y^2 - Z^2, char poly (x-T)^2 - r^2", SAMPLES, || {
        let [t, x, y, z] = [(); 4].map(|_| Cyclotomic::rational(sample::rational(&mut r, 20)));
        let hm = minkowski_observable(&field, &t, &x, &y, &z)?;
        let interval = &(&(&(&t * &t) - &(&x * &x)) - &(&y * &y)) - &(&z * &z);
        Ok(differ(&hm.det2()?, &interval).or_else(|| {
            (hm.to_matrix().char_poly().ok()? != expected_char_poly(&t, &x, &y, &z)).then(|| "char poly".to_string())
        }))
    }));
    Ok(SuiteReport::new("core", checks, vec![]))
}

/// The groups of the matrix isomorphism checks, each acting regularly.
pub const ISO_GROUPS: &[&str] = &["C2", "C3", "C6", "klein4", "S3"];

fn matrix_iso() -> Result<SuiteReport> {
    let field = CyclotomicField::new(12)?;
    let mut checks = Vec::new();
    for name in ISO_GROUPS {
        let g = Arc::new(builtin_group(name)?);
        let mut r = rng();
        checks.push(sampled(format!("{name}: M(xy) = M(x) M(y)"), SAMPLES, || {
            let x = sample::iterant(&mut r, &g, &field, 3);
            let y = sample::iterant(&mut r, &g, &field, 3);
            Ok(differ(&(&x * &y).to_matrix(), &(&x.to_matrix() * &y.to_matrix())))
        }));
        let mut r = rng();
        checks.push(sampled(format!("{name}: from_matrix(M(x)) = x"), SAMPLES, || {
            let x = sample::iterant(&mut r, &g, &field, 3);
            Ok(differ(&Iterant::from_matrix(&x.to_matrix(), &g)?, &x))
        }));
        checks.push(Check::new(format!("{name}: action is regular"), g.has_regular_action(), ""));
    }
    Ok(SuiteReport::new("matrix-iso", checks, vec![]))
}

fn quaternions() -> Result<SuiteReport> {
    let field = CyclotomicField::new(4)?;
    let klein = quaternions_klein();
    let iota = quaternions_iota(&field)?;
    let signed = quaternions_signed_perm();
    let mut checks = Vec::new();
    for (label, q) in [("klein", &klein), ("iota", &iota), ("signed", &signed)] {
        checks.extend(q.relations().into_iter().map(|c| Check { name: format!("{label}: {}", c.name), ..c }));
    }
    let [km, sm] = [klein.matrices(), signed.matrices()];
    checks.push(Check::new("klein and signed-permutation 4x4 images agree", km == sm, ""));
    let d = iota_to_klein_identification();
    let conjugated = iota.matrices().iter().map(|m| Ok(&(&d * &realify(m)?) * &d)).collect::<Result<Vec<_>>>()?;
    checks.push(Check::new("realified iota images conjugate to klein by diag(1,-1,1,-1)", conjugated == km, ""));
    Ok(SuiteReport::new("quaternions", checks, vec![]))
}

fn fermion() -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for n in 1..=4 {
        let basis = ProjectorBasis::new(n)?;
        let result = basis.check_invariants();
        checks.push(Check::new(format!("projector basis n = {n}"), result.is_ok(), result.err().unwrap_or_default()));
    }
    let (c, cdag, num) = fermion_ops();
    let one = M::identity(2);
    let zero = M::zeros(2, 2);
    checks.extend([
        Check::equal("{c, cdag} = 1", &c.anticommutator(&cdag)?, &one),
        Check::equal("c^2 = 0", &(&c * &c), &zero),
        Check::equal("cdag^2 = 0", &(&cdag * &cdag), &zero),
        Check::equal("N^2 = N", &(&num * &num), &num),
        Check::equal("N = cdag c", &(&cdag * &c), &num),
        Check::equal("c = dagger(cdag)", &cdag.dagger(), &c),
    ]);
    let p = pauli_ops();
    let i = Cyclotomic::i();
    checks.extend([
        Check::equal("X^2 = 1", &(&p.x * &p.x), &one),
        Check::equal("Y^2 = 1", &(&p.y * &p.y), &one),
        Check::equal("Z^2 = 1", &(&p.z * &p.z), &one),
        Check::equal("XY = iZ", &(&p.x * &p.y), &p.z.scale(&i)),
        Check::equal("[Sx, Sy] = i Sz", &p.sx.commutator(&p.sy)?, &p.sz.scale(&i)),
    ]);
    let bound = two_level_bindings(&c2())?;
    let find = |n: &str| bound.iter().find(|(k, _)| k == n).map(|(_, v)| v.to_matrix()).expect("bound name");
    checks.push(Check::new(
        "iterant forms of c, cdag, N match the matrices",
        find("c") == c && find("cdag") == cdag && find("N") == num,
        "",
    ));
    Ok(SuiteReport::new("fermion", checks, vec![]))
}

fn majorana() -> Result<SuiteReport> {
    let (n1, n2) = majorana_pair();
    let one = M::identity(2);
    let (c, cdag, _) = fermion_ops();
    let checks = vec![
        Check::equal("n1^2 = 1", &(&n1 * &n1), &one),
        Check::equal("n2^2 = 1", &(&n2 * &n2), &one),
        Check::equal("{n1, n2} = 0", &n1.anticommutator(&n2)?, &M::zeros(2, 2)),
        Check::new("n1, n2 Hermitian", n1.is_hermitian() && n2.is_hermitian(), ""),
        Check::equal("n1 = cdag + c", &n1, &(&cdag + &c)),
        Check::equal("n2 = i(cdag - c)", &n2, &(&cdag - &c).scale(&Cyclotomic::i())),
    ];
    Ok(SuiteReport::new("majorana", checks, vec![]))
}

fn parafermion(n: u32) -> Result<SuiteReport> {
    let field = CyclotomicField::new(n)?;
    let (e, eta) = parafermion_pair(n, &field)?;
    let [ei, hi] = parafermion_iterants(n, &field)?;
    let one = M::identity(n as usize);
    let omega = field.root(n, 1)?;
    let rank = monomial_rank(&e, &eta)?;
    let gi = ei.group().clone();
    let checks = vec![
        Check::equal(format!("e^{n} = 1"), &e.pow(n)?, &one),
        Check::equal(format!("h^{n} = 1"), &eta.pow(n)?, &one),
        Check::equal("e h = zeta h e", &(&e * &eta), &(&eta * &e).scale(&omega)),
        Check::equal("rank of the n^2 monomials e^a h^b", &rank, &((n * n) as usize)),
        Check::equal(format!("iterant e^{n} = 1"), &ei.pow(n), &It::one(&gi)),
        Check::equal(format!("iterant h^{n} = 1"), &hi.pow(n), &It::one(&gi)),
        Check::equal("iterant e h = zeta h e", &(&ei * &hi), &(&hi * &ei).scale(&omega)),
    ];
    let derived = vec![DerivedValue::text("monomial rank", rank.to_string())];
    Ok(SuiteReport::new(&format!("parafermion:{n}"), checks, derived))
}

fn su3() -> Result<SuiteReport> {
    let set = gell_mann(&CyclotomicField::new(12)?)?;
    let table = derive_structure_constants(&set)?;
    let mut checks = set.orthonormality_checks();
    checks.extend(structure_checks(&table));
    checks.extend(cartan_weyl_checks(&set)?);
    checks.extend(transposition_checks(&set)?);
    let mut derived: Vec<DerivedValue> =
        table.basis_entries().iter().map(|((a, b, c), v)| DerivedValue::scalar(format!("f{a}{b}{c}"), v)).collect();
    for (a, b, c) in [(4, 5, 8), (6, 7, 8)] {
        derived.push(DerivedValue::text(format!("f{a}{b}{c} reading"), radical_reading(table.get(a, b, c))));
    }
    Ok(SuiteReport::new("su3", checks, derived))
}

/// `t = ζ₆`, the root at which the braid maps are checked.
pub fn braid_root() -> Cyclotomic {
    Cyclotomic::zeta(6, 1)
}

fn braids() -> Result<SuiteReport> {
    let t = braid_root();
    let mut checks = Vec::new();
    for n in [3, 4] {
        checks.extend(
            rho_relation_checks(n, &t, FramingReading::Constant)?
                .into_iter()
                .map(|c| Check { name: format!("FB{n}: {}", c.name), ..c }),
        );
    }
    let padded = rho_relation_checks(3, &t, FramingReading::Padded)?;
    let broken: Vec<&str> = padded.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    checks.push(Check::new(
        "padded reading [t,t,1] breaks the braid relation (expected)",
        broken.iter().any(|n| n.starts_with("rho(s1 s2 s1)")),
        format!("fails: {}", broken.join("; ")),
    ));

    let (ep, em, gamma) = (positron(), electron(), photon());
    let pair = BraidAlgebraElement::from(ep.mul(&em)?);
    let g = BraidAlgebraElement::from(gamma.clone());
    checks.push(Check::equal("e+ e- = gamma (normal form)", &ep.mul(&em)?, &gamma));
    checks.push(Check::equal("rho(e+ e-) = rho(gamma)", &rho(&pair, &t)?, &rho(&g, &t)?));
    checks.push(Check::equal(
        "rho(e+) rho(e-) = rho(gamma)",
        &(&rho(&ep.clone().into(), &t)? * &rho(&em.clone().into(), &t)?),
        &rho(&g, &t)?,
    ));
    checks.push(Check::equal("embed_su3(e+ e-) = embed_su3(gamma)", &embed_su3(&pair, &t)?, &embed_su3(&g, &t)?));
    for (label, x) in [("e+", &ep), ("e-", &em)] {
        let x = BraidAlgebraElement::from(x.clone());
        checks.push(Check::equal(
            format!("embed_su3({label}) = P/Q image of rho({label})"),
            &embed_su3(&x, &t)?,
            &Iterant::from_matrix(&rho(&x, &t)?.to_matrix(), &c3_ab())?,
        ));
    }
    let report = verify_factorization(&gamma, &[ep.clone(), em.clone()])?;
    checks.push(Check::new("gamma = e+ e- as a factorization", report.holds, report.factors_product));

    let a = FramedBraid::with_exponents(&[1, 2, 3, 4], BraidWord::from_pairs(4, &[(1, 1), (2, 1), (3, 1)])?)?;
    let b = FramedBraid::with_exponents(&[5, 6, 7, 8], BraidWord::from_pairs(4, &[(2, 1), (3, 1)])?)?;
    let expected =
        FramedBraid::with_exponents(&[9, 7, 9, 11], BraidWord::from_pairs(4, &[(1, 1), (2, 1), (3, 1), (2, 1), (3, 1)])?)?;
    checks.push(Check::equal("[t,t^2,t^3,t^4]s1 s2 s3 [t^5,...,t^8]s2 s3 slides framings", &a.mul(&b)?, &expected));

    let local = rho_relation_checks(3, &t, FramingReading::Local)?;
    let local4 = rho_relation_checks(4, &t, FramingReading::Local)?;
    let derived = vec![
        DerivedValue::text("e+ e-", ep.mul(&em)?.to_string()),
        DerivedValue::text("rho(e+)", rho(&ep.into(), &t)?.to_string()),
        DerivedValue::text(
            "local reading passes relations and inverses",
            (all_pass(&local) && all_pass(&local4)).to_string(),
        ),
    ];
    Ok(SuiteReport::new("braids", checks, derived))
}

/// Runs every suite, with parafermions at `n ∈ {2, 3, 5, 7}`.
pub fn run_all() -> Result<Vec<SuiteReport>> {
    let mut names: Vec<String> = SUITES.iter().filter(|s| !s.contains(':')).map(|s| s.to_string()).collect();
    names.extend([2, 3, 5, 7].map(|n| format!("parafermion:{n}")));
    names.iter().map(|n| run_suite(n)).collect()
}
