use crate::error::Result;
use crate::iterants::Iterant;
use crate::physics::c2;
use crate::scalars::CyclotomicField;
use crate::Cyclotomic;

/// `H = [T+X, T−X] + [Y + Zι, Y − Zι]η`.
pub fn minkowski_observable(
    field: &CyclotomicField,
    t: &Cyclotomic,
    x: &Cyclotomic,
    y: &Cyclotomic,
    z: &Cyclotomic,
) -> Result<Iterant<Cyclotomic>> {
    let iota = field.i()?;
    let g = c2();
    let zi = z * &iota;
    let diag = Iterant::vector(&g, vec![t + x, t - x])?;
    let off = Iterant::labelled(&g, vec![y + &zi, y - &zi], "h")?;
    diag.add(&off)
}

/// `(x − T)² − (X² + Y² + Z²)` as coefficients of `x⁰, x¹, x²`.
pub fn expected_char_poly(t: &Cyclotomic, x: &Cyclotomic, y: &Cyclotomic, z: &Cyclotomic) -> Vec<Cyclotomic> {
    let r2 = &(&(x * x) + &(y * y)) + &(z * z);
    vec![&(t * t) - &r2, -(t + t), Cyclotomic::from(1)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(n: i64) -> Cyclotomic {
        Cyclotomic::from(n)
    }

    fn f4() -> CyclotomicField {
        CyclotomicField::new(4).unwrap()
    }

    #[test]
    fn rest_frame() {
        let h = minkowski_observable(&f4(), &c(1), &c(0), &c(0), &c(0)).unwrap();
        assert_eq!(h.det2().unwrap(), c(1));
        assert_eq!(h.to_matrix().char_poly().unwrap(), vec![c(1), c(-2), c(1)]);
    }

    #[test]
    fn unit_interval() {
        let h = minkowski_observable(&f4(), &c(2), &c(1), &c(1), &c(1)).unwrap();
        // direct 2x2 determinant: (2+1)(2-1) - (1+i)(1-i) = 3 - 2
        assert_eq!(h.det2().unwrap(), c(1));
        assert!(h.to_matrix().is_hermitian());
    }

    #[test]
    fn needs_i() {
        assert!(minkowski_observable(&CyclotomicField::new(3).unwrap(), &c(1), &c(0), &c(0), &c(0)).is_err());
    }

    proptest! {
        #[test]
        fn interval_and_char_poly(v in proptest::collection::vec((-20i64..20, 1i64..6), 4)) {
            let [t, x, y, z]: [Cyclotomic; 4] =
                v.iter().map(|&(n, d)| Cyclotomic::ratio(n, d)).collect::<Vec<_>>().try_into().unwrap();
            let h = minkowski_observable(&f4(), &t, &x, &y, &z).unwrap();
            let interval = &(&(&(&t * &t) - &(&x * &x)) - &(&y * &y)) - &(&z * &z);
            prop_assert_eq!(h.det2().unwrap(), interval);
            prop_assert_eq!(h.to_matrix().char_poly().unwrap(), expected_char_poly(&t, &x, &y, &z));
            prop_assert!(h.to_matrix().is_hermitian());
        }
    }
}
