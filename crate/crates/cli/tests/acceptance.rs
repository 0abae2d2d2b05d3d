//! Acceptance criteria, one line each. Every comparison is exact and every
//! random sample comes from a fixed ChaCha8 seed.
//!
//! Runs without the libtest harness so the eleven verdicts print in order;
//! the process exits nonzero when any criterion fails.

use std::process::{Command, ExitCode};
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use iterant_core::braids::{
    electron, embed_su3, photon, positron, rho, rho_relation_checks, BraidAlgebraElement, FramingReading,
};
use iterant_core::check::Check;
use iterant_core::expr::{eval_str, parse, Context, Value};
use iterant_core::physics::{
    expected_char_poly, fermion_ops, majorana_pair, minkowski_observable, monomial_rank, parafermion_pair,
    quaternions_iota, quaternions_klein, quaternions_signed_perm, ProjectorBasis,
};
use iterant_core::sample;
use iterant_core::scalars::CyclotomicField;
use iterant_core::su3::{
    cartan_weyl_checks, derive_structure_constants, gell_mann, radical_reading, transposition_checks,
};
use iterant_core::{builtin_group, CycMatrix, Cyclotomic, Iterant, LaurentPoly};

const SEED: u64 = 0x1d3a_7e57;
const SAMPLES: usize = 100;

/// A criterion's verdict plus the lines explaining any failure.
struct Verdict {
    pass: bool,
    notes: Vec<String>,
}

impl Verdict {
    fn from_checks(checks: &[Check]) -> Verdict {
        let notes = checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| if c.detail.is_empty() { c.name.clone() } else { format!("{}: {}", c.name, c.detail) })
            .collect::<Vec<_>>();
        Verdict { pass: notes.is_empty(), notes }
    }

    fn note(mut self, line: impl Into<String>) -> Verdict {
        self.notes.push(line.into());
        self
    }
}

fn rng(criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ criterion)
}

fn field12() -> CyclotomicField {
    CyclotomicField::new(12).unwrap()
}

fn imaginary_unit() -> Verdict {
    let ctx = Context::new("C2", 12).unwrap();
    let v = eval_str("([1,-1]h)^2", &ctx).unwrap();
    let minus_one = Value::Scalar(LaurentPoly::constant(Cyclotomic::from(-1)));
    Verdict::from_checks(&[Check::equal("([1,-1]h)^2 = -1", &v, &minus_one)])
}

fn matrix_isomorphism() -> Verdict {
    let mut checks = Vec::new();
    let field = field12();
    let mut r = rng(2);
    for name in ["C2", "C3", "C6", "klein4", "S3"] {
        let g = Arc::new(builtin_group(name).unwrap());
        let (mut hom, mut inv) = (true, true);
        for _ in 0..SAMPLES {
            let x = sample::iterant(&mut r, &g, &field, 3);
            let y = sample::iterant(&mut r, &g, &field, 3);
            hom &= (&x * &y).to_matrix() == &x.to_matrix() * &y.to_matrix();
            inv &= Iterant::from_matrix(&x.to_matrix(), &g).map(|back| back == x).unwrap_or(false);
        }
        checks.push(Check::new(format!("{name}: to_matrix(xy) = to_matrix(x) to_matrix(y)"), hom, ""));
        checks.push(Check::new(format!("{name}: from_matrix(to_matrix(x)) = x"), inv, ""));
    }
    Verdict::from_checks(&checks)
}

fn determinants() -> Verdict {
    let field = field12();
    let g = Arc::new(builtin_group("C2").unwrap());
    let mut r = rng(3);
    let (mut mult, mut comm) = (true, true);
    for _ in 0..SAMPLES {
        let z = sample::iterant(&mut r, &g, &field, 4);
        let w = sample::iterant(&mut r, &g, &field, 4);
        mult &= (&z * &w).det2().unwrap() == &z.det2().unwrap() * &w.det2().unwrap();
        let zbar = z.conj2().unwrap();
        comm &= &z * &zbar == &zbar * &z;
    }
    Verdict::from_checks(&[Check::new("D(ZW) = D(Z)D(W)", mult, ""), Check::new("Z conj(Z) = conj(Z) Z", comm, "")])
}

fn quaternions() -> Verdict {
    let klein = quaternions_klein();
    let signed = quaternions_signed_perm();
    let mut checks = Vec::new();
    for (name, q) in [("klein", &klein), ("iota", &quaternions_iota(&field12()).unwrap()), ("signed", &signed)] {
        checks.extend(q.relations().into_iter().map(|c| Check { name: format!("{name}: {}", c.name), ..c }));
    }
    checks.push(Check::new("klein and signed matrices agree", klein.matrices() == signed.matrices(), ""));
    Verdict::from_checks(&checks)
}

fn projectors() -> Verdict {
    let mut checks = Vec::new();
    for n in 1..=4 {
        let ok = ProjectorBasis::new(n).unwrap().check_invariants();
        checks.push(Check::new(format!("projector basis n = {n}"), ok.is_ok(), ok.err().unwrap_or_default()));
    }
    let one = CycMatrix::identity(2);
    let (c, cd, n) = fermion_ops();
    checks.push(Check::equal("{c, cdag} = 1", &c.anticommutator(&cd).unwrap(), &one));
    checks.push(Check::new("c^2 = 0", (&c * &c).is_zero(), ""));
    checks.push(Check::equal("N^2 = N", &(&n * &n), &n));
    let (e1, e2) = majorana_pair();
    checks.push(Check::equal("eta1^2 = 1", &(&e1 * &e1), &one));
    checks.push(Check::equal("eta2^2 = 1", &(&e2 * &e2), &one));
    checks.push(Check::new("{eta1, eta2} = 0", e1.anticommutator(&e2).unwrap().is_zero(), ""));
    Verdict::from_checks(&checks)
}

fn parafermions() -> Verdict {
    let mut checks = Vec::new();
    for n in [2u32, 3, 5, 7] {
        let field = CyclotomicField::new(n).unwrap();
        let (e, eta) = parafermion_pair(n, &field).unwrap();
        let one = CycMatrix::identity(n as usize);
        checks.push(Check::equal(format!("n = {n}: e^n = 1"), &e.pow(n).unwrap(), &one));
        checks.push(Check::equal(format!("n = {n}: eta^n = 1"), &eta.pow(n).unwrap(), &one));
        let omega = field.root(n, 1).unwrap();
        checks.push(Check::equal(format!("n = {n}: e eta = w eta e"), &(&e * &eta), &(&eta * &e).scale(&omega)));
        let rank = monomial_rank(&e, &eta).unwrap();
        checks.push(Check::new(format!("n = {n}: monomials independent"), rank == (n * n) as usize, format!("rank {rank}")));
    }
    Verdict::from_checks(&checks)
}

fn su3() -> Verdict {
    let set = gell_mann(&field12()).unwrap();
    let mut checks = Vec::new();
    for a in 1..=8 {
        for b in 1..=8 {
            let expected = Cyclotomic::from(if a == b { 2 } else { 0 });
            checks.push(Check::equal(format!("tr(l{a} l{b})"), &set.trace_form(a, b), &expected));
        }
    }
    let table = derive_structure_constants(&set).unwrap();
    let h = |n| Cyclotomic::ratio(n, 2);
    let printed = [
        ((1, 2, 3), Cyclotomic::from(1)),
        ((1, 4, 7), h(1)),
        ((1, 5, 6), h(-1)),
        ((2, 4, 6), h(1)),
        ((2, 5, 7), h(1)),
        ((3, 4, 5), h(1)),
        ((3, 6, 7), h(-1)),
    ];
    for ((a, b, c), v) in &printed {
        checks.push(Check::equal(format!("f{a}{b}{c} = {v}"), table.get(*a, *b, *c), v));
    }
    checks.extend(cartan_weyl_checks(&set).unwrap());
    let mut verdict = Verdict::from_checks(&checks);
    for (a, b, c) in [(4, 5, 8), (6, 7, 8)] {
        let v = table.get(a, b, c);
        verdict = verdict.note(format!("f{a}{b}{c} = {v} (~ {}), which is {}", v.to_decimal_string(), radical_reading(v)));
    }
    verdict
}

fn transpositions() -> Verdict {
    Verdict::from_checks(&transposition_checks(&gell_mann(&field12()).unwrap()).unwrap())
}

fn braids() -> Verdict {
    let t = Cyclotomic::zeta(6, 1);
    let mut checks = rho_relation_checks(3, &t, FramingReading::Constant).unwrap();
    let (ep, em, gamma) = (positron(), electron(), photon());
    checks.push(Check::equal("e+ e- = gamma in normal form", &ep.mul(&em).unwrap(), &gamma));
    let pair = BraidAlgebraElement::from(ep.mul(&em).unwrap());
    let g = BraidAlgebraElement::from(gamma);
    let (xp, xm) = (BraidAlgebraElement::from(ep), BraidAlgebraElement::from(em));
    checks.push(Check::equal(
        "rho(e+) rho(e-) = rho(gamma)",
        &(&rho(&xp, &t).unwrap() * &rho(&xm, &t).unwrap()),
        &rho(&g, &t).unwrap(),
    ));
    checks.push(Check::equal("rho(e+ e-) = rho(gamma)", &rho(&pair, &t).unwrap(), &rho(&g, &t).unwrap()));
    checks.push(Check::equal(
        "embed_su3(e+) embed_su3(e-) = embed_su3(gamma)",
        &(&embed_su3(&xp, &t).unwrap() * &embed_su3(&xm, &t).unwrap()),
        &embed_su3(&g, &t).unwrap(),
    ));
    let padded = rho_relation_checks(3, &t, FramingReading::Padded).unwrap();
    let broken: Vec<&str> = padded.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
    checks.push(Check::new(
        "padded [t,t,1] reading breaks a relation (expected failure)",
        !broken.is_empty(),
        "every relation held under the padded reading",
    ));
    Verdict::from_checks(&checks).note(format!("padded reading fails: {}", broken.join("; ")))
}

fn minkowski() -> Verdict {
    let field = CyclotomicField::new(4).unwrap();
    let mut r = rng(10);
    let (mut det, mut poly) = (true, true);
    for _ in 0..SAMPLES {
        let [t, x, y, z] = [(); 4].map(|_| Cyclotomic::rational(sample::rational(&mut r, 9)));
        let h = minkowski_observable(&field, &t, &x, &y, &z).unwrap();
        let expected = &(&(&(&t * &t) - &(&x * &x)) - &(&y * &y)) - &(&z * &z);
        det &= h.det2().unwrap() == expected;
        poly &= h.to_matrix().char_poly().unwrap() == expected_char_poly(&t, &x, &y, &z);
    }
    Verdict::from_checks(&[
        Check::new("det2(H) = T^2 - X^2 - Y^2 - Z^2", det, ""),
        Check::new("char poly = (x - T)^2 - (X^2 + Y^2 + Z^2)", poly, ""),
    ])
}

/// `(context, order, input, printed normal form when known)`.
const CORPUS: &[(&str, u32, &str, Option<&str>)] = &[
    ("C2", 12, "([1,-1]h)^2", Some("-1")),
    ("C2", 12, "[1,-1]h * [1,-1]h", Some("-1")),
    ("C2", 12, "e1 + e2", Some("1")),
    ("C2", 12, "e1 e2", Some("0")),
    ("C2", 12, "[1,0]h [0,1]h", Some("[1,0]")),
    ("C2", 12, "[0,1]h [1,0]h", Some("[0,1]")),
    ("C2", 12, "e1 h - h e2", Some("0")),
    ("C2", 12, "{h, e}", Some("0")),
    ("C2", 12, "comm(h, h)", Some("0")),
    ("C2", 12, "[2,3] + [1,5]h", Some("[2,3] + [1,5]h")),
    ("C2", 12, "[2,3]h [5,7]h", Some("[14,15]")),
    ("C2", 12, "1 + w + w^2", Some("0")),
    ("C2", 12, "(zeta(12,1) - zeta(12,5))^2", Some("3")),
    ("C2", 12, "i^2", Some("-1")),
    ("C2", 12, "1/2 + 1/3 zeta(12,1)", None),
    ("C6", 12, "S^3", Some("[1,1,1,1,1,1]S^3")),
    ("C6", 12, "S^6", Some("1")),
    ("su3", 12, "[1,0,0]A + [0,1,0]B", Some("[1,0,0]A + [0,1,0]B")),
    ("su3", 12, "l1 - ([1,0,0]A + [0,1,0]B)", Some("0")),
    ("su3", 12, "l3 - [1,-1,0]", Some("0")),
    ("su3", 12, "F1 + i F2", Some("[1,0,0]A")),
    ("su3", 12, "F6 - i F7", Some("[0,0,1]B")),
    ("su3", 12, "comm(Tp, Tm) - 2 T3", Some("0")),
    ("su3", 12, "Q P", Some("[1,1,1]A")),
    ("su3", 12, "P Q", Some("[1,1,1]B")),
    ("su3", 12, "P Q P - Q P Q", Some("0")),
    ("su3", 12, "P - ([0,0,1] + [1,0,0]A + [0,1,0]B)", Some("0")),
    ("su3", 12, "[1,2,3] S - S [3,1,2]", Some("0")),
    ("su3", 12, "l8", None),
    ("pauli", 12, "{X, Y}", Some("0")),
    ("pauli", 12, "comm(Sx, Sy) - i Sz", Some("0")),
    ("pauli", 12, "Z^2", Some("1")),
    ("pauli", 12, "R S - P", Some("0")),
    ("fermion", 12, "{c, cdag}", Some("1")),
    ("fermion", 12, "N^2 - N", Some("0")),
    ("fermion", 12, "c^2", Some("0")),
    ("majorana", 12, "n1^2", Some("1")),
    ("majorana", 12, "{n1, n2}", Some("0")),
    ("majorana", 12, "1/2 (n1 + i n2) - S", Some("0")),
    ("klein4", 12, "I J K", Some("-1")),
    ("klein4", 12, "I J - K", Some("0")),
    ("klein4", 12, "A^2", Some("1")),
    ("klein4", 12, "A B", Some("[1,1,1,1]C")),
    ("quaternion:iota", 12, "J^2", Some("-1")),
    ("quaternion:iota", 12, "I J + J I", Some("0")),
    ("quaternion:signed", 12, "I^2", Some("-1")),
    ("quaternion:signed", 12, "I J - K", Some("0")),
    ("parafermion:3", 12, "e h - w h e", Some("0")),
    ("parafermion:3", 12, "h^3", Some("1")),
    ("parafermion:5", 60, "e h - zeta(5,1) h e", Some("0")),
    ("minkowski(2,1,1,1)", 12, "H", None),
    ("FB3", 12, "\"e+\" \"e-\"", Some("[1,1,1]")),
    ("FB3", 12, "gamma", Some("[1,1,1]")),
    ("FB3", 12, "[t,t,t] s1 s2^-1", Some("[t,t,t]s1 s2^-1")),
    ("FB3", 12, "s2 s1^-1 [t^-1,t^-1,t^-1]", Some("[t^-1,t^-1,t^-1]s2 s1^-1")),
    ("FB3", 12, "s1 s1^-1", Some("[1,1,1]")),
    ("FB4", 12, "[t,t^2,t^3,t^4] s1 s2 s3 [t^5,t^6,t^7,t^8] s2 s3", Some("[t^9,t^7,t^9,t^11]s1 s2 s3 s2 s3")),
];

/// Inputs that must be rejected with `line:col` and exit status 2.
const MALFORMED: &[(&str, &str)] = &[
    ("[x,y", "1:4"),
    ("1 +", "1:3"),
    ("1 + + 2", "1:5"),
    ("(1 + 2", "1:6"),
    ("[1,2]]", "1:6"),
    ("2 $ 3", "1:3"),
    ("zeta(12", "1:7"),
    ("comm(h)", "1:7"),
    ("1/0", "1:1"),
    ("h ^ x", "1:5"),
];

fn round_trip(ctx: &Context, input: &str, expected: Option<&str>) -> Check {
    let name = format!("{} | {input}", ctx.name());
    let first: Value = match eval_str(input, ctx) {
        Ok(v) => v,
        Err(e) => return Check::failed(name, e),
    };
    let printed = first.to_string();
    if let Some(want) = expected {
        if printed != want {
            return Check::new(name, false, format!("printed {printed:?}, expected {want:?}"));
        }
    }
    match eval_str(&printed, ctx) {
        Ok(second) => Check::equal(name, &second, &first),
        Err(e) => Check::failed(name, format!("reparse of {printed:?}: {e}")),
    }
}

fn parser_contract() -> Verdict {
    let mut checks = Vec::new();
    for (name, order, input, expected) in CORPUS {
        let ctx = Context::new(name, *order).unwrap();
        let ast = parse(input);
        checks.push(Check::new(format!("{input} parses"), ast.is_ok(), ""));
        if let Ok(ast) = ast {
            let reparsed = parse(&ast.to_string());
            checks.push(Check::new(format!("{input} AST prints and reparses"), reparsed.as_ref() == Ok(&ast), ""));
        }
        checks.push(round_trip(&ctx, input, *expected));
    }
    for (input, at) in MALFORMED {
        let out = Command::new(env!("CARGO_BIN_EXE_iterant")).args(["eval", input]).output().unwrap();
        let err = String::from_utf8_lossy(&out.stderr);
        let status = out.status.code();
        checks.push(Check::new(
            format!("{input:?} rejected at {at} with status 2"),
            status == Some(2) && err.contains(&format!("{at}:")),
            format!("status {status:?}, stderr {}", err.trim()),
        ));
    }
    Verdict::from_checks(&checks).note(format!("{} corpus expressions, {} malformed inputs", CORPUS.len(), MALFORMED.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("iterant imaginary unit squares to -1", imaginary_unit),
        ("matrix isomorphism on C2, C3, C6, klein4, S3", matrix_isomorphism),
        ("determinant multiplicativity and conjugate commutation", determinants),
        ("quaternions three ways", quaternions),
        ("projectors, fermions and Majorana pairs", projectors),
        ("parafermions for n in {2, 3, 5, 7}", parafermions),
        ("su(3) trace form, structure constants and Cartan-Weyl forms", su3),
        ("transposition embedding", transpositions),
        ("braid embedding at t = zeta(6,1)", braids),
        ("Minkowski observable", minkowski),
        ("parser contract", parser_contract),
    ];
    let mut failed = 0;
    for (k, (title, run)) in criteria.iter().enumerate() {
        let v = run();
        println!("criterion {:>2}: {}  {title}", k + 1, if v.pass { "PASS" } else { "FAIL" });
        for line in &v.notes {
            println!("      {line}");
        }
        failed += usize::from(!v.pass);
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
