//! Permutations, groups and iterants against hand-built matrix images.

use std::sync::Arc;

use iterant_core::groups::Perm;
use iterant_core::{builtin_group, CycIterant, CycMatrix, Cyclotomic, Group, Iterant, RatMatrix, Rational};
use num_traits::Zero;
use proptest::prelude::*;

/// `Σ_g diag(v_g)·P_g` with `(P_g)_{i, i·g} = 1`, from the raw action.
fn matrix_oracle(x: &CycIterant) -> CycMatrix {
    let g = x.group();
    let n = g.degree();
    let mut rows = vec![vec![Cyclotomic::zero(); n]; n];
    for (e, v) in x.terms() {
        let images = g.action(e).images_one_based();
        for i in 0..n {
            let j = images[i] - 1;
            rows[i][j] = &rows[i][j] + &v[i];
        }
    }
    CycMatrix::from_rows(rows).unwrap()
}

fn cycles(n: usize, cs: &[&[usize]]) -> Perm {
    Perm::from_cycles(n, cs).unwrap()
}

#[test]
fn composition_reads_left_to_right() {
    let s = cycles(4, &[&[1, 2], &[3, 4]]);
    let l = cycles(4, &[&[1, 3], &[2, 4]]);
    assert_eq!(s.compose(&l).unwrap(), cycles(4, &[&[1, 4], &[2, 3]]));
    assert_eq!(s.compose(&Perm::identity(4)).unwrap(), s);
    // 1 -> 2 -> 3, 2 -> 3 -> 1, 3 -> 1 -> 2
    let c = cycles(3, &[&[1, 2, 3]]);
    assert_eq!(c.compose(&c).unwrap().images_one_based(), vec![3, 1, 2]);
    assert_eq!(c.compose(&c).unwrap(), cycles(3, &[&[1, 3, 2]]));
    assert!(s.compose(&c).is_err());
}

#[test]
fn regular_actions_are_homomorphisms() {
    for name in ["C2", "C3", "C6", "klein4", "S3", "S3nat", "S4nat"] {
        let g = builtin_group(name).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(g.action(a).compose(g.action(b)).unwrap(), *g.action(g.mul(a, b)), "{name}");
            }
        }
    }
}

#[test]
fn bad_cayley_tables_are_rejected() {
    let labels = ["1", "a", "b"].map(String::from).to_vec();
    let not_latin = vec![vec![0, 1, 2], vec![1, 1, 0], vec![2, 0, 1]];
    assert!(Group::from_cayley("bad", labels, not_latin).is_err());
}

#[test]
fn vector_action_composes() {
    let g = builtin_group("S3nat").unwrap();
    let v: Vec<i64> = vec![10, 20, 30];
    for a in g.elements() {
        for b in g.elements() {
            let lhs = g.vector_act(&g.vector_act(&v, a).unwrap(), b).unwrap();
            assert_eq!(lhs, g.vector_act(&v, g.mul(a, b)).unwrap());
        }
    }
    assert!(g.vector_act(&[1, 2], g.identity()).is_err());
}

#[test]
fn lemma_layout_on_c3() {
    let g = Arc::new(builtin_group("C3").unwrap());
    // rows (a,d,g), (h,b,e), (f,k,c) with a..k = 1..9
    let m = CycMatrix::from_ints(&[&[1, 4, 7], &[8, 2, 5], &[6, 9, 3]]);
    let x = Iterant::from_matrix(&m, &g).unwrap();
    assert_eq!(x.to_string(), "[1,2,3] + [4,5,6]S + [7,8,9]S^2");
    assert_eq!(matrix_oracle(&x), m);
    assert_eq!(Iterant::from_matrix(&CycMatrix::identity(3), &g).unwrap().to_string(), "1");
}

#[test]
fn c6_shift_cubed() {
    let g = Arc::new(builtin_group("C6").unwrap());
    let s = Iterant::element(&g, g.find("S").unwrap());
    let cube = s.pow(3);
    assert_eq!(cube.to_string(), "[1,1,1,1,1,1]S^3");
    assert_eq!(Iterant::from_matrix(&matrix_oracle(&cube), &g).unwrap(), cube);
}

#[test]
fn non_tiling_action_is_reported() {
    let g = Arc::new(builtin_group("S3nat").unwrap());
    assert!(Iterant::from_matrix(&CycMatrix::identity(3), &g).is_err());
    let c2 = Arc::new(builtin_group("C2").unwrap());
    assert!(Iterant::from_matrix(&CycMatrix::identity(3), &c2).is_err());
}

#[test]
fn two_by_two_forms() {
    let g = Arc::new(builtin_group("C2").unwrap());
    let h = g.find("h").unwrap();
    let c = |xs: &[i64]| xs.iter().map(|&x| Cyclotomic::from(x)).collect::<Vec<_>>();
    // [a,b] + [c,d]h with a=1, b=2, c=3, d=4: det = ab - cd
    let z = &Iterant::vector(&g, c(&[1, 2])).unwrap() + &Iterant::monomial(&g, c(&[3, 4]), h).unwrap();
    assert_eq!(z.det2().unwrap(), Cyclotomic::from(2 - 12));
    assert_eq!(matrix_oracle(&z), CycMatrix::from_ints(&[&[1, 3], &[4, 2]]));
    assert_eq!(z.to_matrix().det().unwrap(), z.det2().unwrap());
    let prod = &z * &z.conj2().unwrap();
    assert_eq!(prod.as_scalar(), Some(z.det2().unwrap()));
}

#[test]
fn rational_scalars_work_too() {
    let g = Arc::new(builtin_group("C3").unwrap());
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    let x = Iterant::vector(&g, vec![r(1, 2), r(1, 3), r(1, 4)]).unwrap();
    let m: RatMatrix = x.to_matrix();
    assert_eq!(Iterant::from_matrix(&m, &g).unwrap(), x);
    let y = Iterant::<f64>::vector(&g, vec![0.5, 2.0, 4.0]).unwrap();
    assert_eq!((&y * &y).to_matrix().get(2, 2), &16.0);
}

fn group_and_pair() -> impl Strategy<Value = (Arc<Group>, CycIterant, CycIterant)> {
    const NAMES: [&str; 6] = ["C2", "C3", "C6", "klein4", "S3", "S3nat"];
    (proptest::sample::select(&NAMES[..]), any::<u64>()).prop_map(|(name, seed)| {
        use rand::SeedableRng;
        let g = Arc::new(builtin_group(name).unwrap());
        let field = iterant_core::scalars::CyclotomicField::new(12).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let x = iterant_core::sample::iterant(&mut rng, &g, &field, 2);
        let y = iterant_core::sample::iterant(&mut rng, &g, &field, 2);
        (g, x, y)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matrix_image_is_multiplicative((_g, x, y) in group_and_pair()) {
        prop_assert_eq!(x.to_matrix(), matrix_oracle(&x));
        prop_assert_eq!(matrix_oracle(&(&x * &y)), &matrix_oracle(&x) * &matrix_oracle(&y));
    }

    #[test]
    fn decomposition_inverts_the_image((g, x, _y) in group_and_pair()) {
        if g.has_regular_action() {
            prop_assert_eq!(Iterant::from_matrix(&x.to_matrix(), &g).unwrap(), x);
        }
    }

    #[test]
    fn ring_laws((_g, x, y) in group_and_pair()) {
        prop_assert_eq!(&x * &(&y + &x), &(&x * &y) + &(&x * &x));
        prop_assert!((&x - &x).is_zero());
    }
}
