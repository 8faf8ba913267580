use apery_core::lincomb::alpha_parts;
use apery_core::numerics::{
    mzv, pi, reduce_integer_entries, eval_poly_lincomb, sigma_empty, sigma_oracle, sigma_tail,
    zeta_double_tail_oracle, zeta_sym_tail,
};
use apery_core::{ApproxReal, Composition, DualityClass};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn lo(x: &ApproxReal) -> BigRational {
    x.value() - x.abs_error()
}

fn hi(x: &ApproxReal) -> BigRational {
    x.value() + x.abs_error()
}

fn pow_rat(base: u64, e: i64) -> BigRational {
    let p = BigRational::from_integer(num_traits::pow(BigInt::from(base), e.unsigned_abs() as usize));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

fn composition(depth: std::ops::RangeInclusive<usize>, max_entry: u32) -> impl Strategy<Value = Composition> {
    proptest::collection::vec(1u32..=max_entry, depth).prop_map(|v| Composition::new(&v).unwrap())
}

fn admissible_composition(depth: std::ops::RangeInclusive<usize>, max_entry: u32) -> impl Strategy<Value = Composition> {
    composition(depth, max_entry).prop_map(|a| {
        let mut e: Vec<u32> = a.entries().iter().map(|&x| u32::from(x)).collect();
        e[0] = e[0].max(2);
        Composition::new(&e).unwrap()
    })
}

#[test]
fn oracle_examples() {
    let s3 = sigma_tail(&"3".parse().unwrap(), 0, 20).unwrap();
    let o3 = sigma_oracle(&[3], 0, 15).unwrap();
    assert!(s3.truncate(o3.prec()).overlaps(&o3));
    for n in 0..6 {
        let e = sigma_oracle(&[], n, 15).unwrap();
        assert!(lo(&e) <= sigma_empty(n) && sigma_empty(n) <= hi(&e));
    }
    let z2 = zeta_double_tail_oracle(&"2".parse().unwrap(), 0, 0, 10).unwrap();
    let p = pi(12).unwrap();
    let want = p.mul(&p).div_int(&BigInt::from(6));
    assert!(z2.overlaps(&want.truncate(z2.prec())));
    let a: Composition = "3,1".parse().unwrap();
    let x = zeta_double_tail_oracle(&a, 2, 5, 10).unwrap();
    let y = zeta_double_tail_oracle(&a.dual().unwrap(), 5, 2, 10).unwrap();
    assert!(x.overlaps(&y));
}

#[test]
fn reduction_leading_zero_example() {
    let r = reduce_integer_entries(&[0, 3, 1]).unwrap();
    let third = BigRational::new(BigInt::one(), BigInt::from(3));
    assert_eq!(r.len(), 2);
    assert_eq!(r.coefficient_of(&"1,3,1".parse().unwrap()).coeffs(), &[third.clone() * BigInt::from(2)]);
    assert_eq!(r.coefficient_of(&"3,1".parse().unwrap()).coeffs(), &[third]);
    let id = reduce_integer_entries(&[1, 2]).unwrap();
    assert_eq!(id.len(), 1);
    assert!(id.coefficient_of(&"1,2".parse().unwrap()).coeffs() == [BigRational::one()]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sigma_tail_recurrence(a in composition(1..=4, 4), n in 1u64..=8) {
        let digits = 30;
        let prev = sigma_tail(&a, n - 1, digits).unwrap();
        let cur = sigma_tail(&a, n, digits).unwrap();
        let r = a.depth();
        let init = Composition::new(&a.entries()[..r - 1].iter().map(|&e| u32::from(e)).collect::<Vec<_>>()).unwrap();
        let step = sigma_tail(&init, n, digits).unwrap().mul_rational(&pow_rat(n, -i64::from(a.entries()[r - 1])));
        let gap = prev.sub(&cur).sub(&step);
        prop_assert!(gap.contains_zero(), "({}) at n = {}", a, n);
    }

    #[test]
    fn zeta_recurrence_against_oracle(a in admissible_composition(1..=3, 3), n in 3u64..=6) {
        let digits = 10;
        let left = zeta_double_tail_oracle(&a, n - 1, n - 1, digits).unwrap()
            .sub(&zeta_double_tail_oracle(&a, n, n, digits).unwrap());
        let k = i64::from(a.weight());
        let mut right = ApproxReal::zero(left.prec());
        for p in alpha_parts(&a).unwrap() {
            let t = if p.is_empty() {
                ApproxReal::from_rational(&sigma_empty(n), left.prec())
            } else {
                zeta_double_tail_oracle(&p, n, n, digits).unwrap()
            };
            right = right.add(&t.mul_rational(&pow_rat(n, i64::from(p.weight()) - k)));
        }
        prop_assert!(left.overlaps(&right), "({}) at n = {}", a, n);
    }

    #[test]
    fn sym_tail_against_oracle(a in admissible_composition(1..=3, 4), n in 2u64..=6) {
        let x = zeta_sym_tail(&DualityClass::of(&a).unwrap(), n, 20).unwrap();
        let y = zeta_double_tail_oracle(&a, n, n, 10).unwrap();
        prop_assert!(x.truncate(y.prec()).overlaps(&y), "({}) at n = {}", a, n);
    }

    #[test]
    fn double_tail_bound(a in admissible_composition(1..=3, 3), m in 1u64..=5, n in 1u64..=5) {
        prop_assume!(u64::from(a.entries()[0]) + m >= 4);
        let x = zeta_double_tail_oracle(&a, m, n, 10).unwrap();
        let z = mzv(&a, 15).unwrap();
        let factor = pow_rat(m, m as i64) * pow_rat(n, n as i64) * pow_rat(m + n, -((m + n) as i64));
        prop_assert!(lo(&x) <= factor * hi(&z), "({}) at m = {}, n = {}", a, m, n);
    }

    #[test]
    fn tail_bounds(a in admissible_composition(1..=3, 4), n in 0u64..=8) {
        let eps = BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)));
        let quarter = pow_rat(4, -(n as i64));
        let s0 = sigma_tail(&a, 0, 20).unwrap();
        let sn = sigma_tail(&a, n, 20).unwrap();
        prop_assert!(lo(&sn) <= &quarter * hi(&s0) * (BigRational::one() + &eps));
        let z = zeta_sym_tail(&DualityClass::of(&a).unwrap(), n, 20).unwrap();
        let p = pi(20).unwrap();
        let bound = p.mul(&p).div_int(&BigInt::from(6));
        prop_assert!(lo(&z) <= quarter * hi(&bound) * (BigRational::one() + eps));
    }

    #[test]
    fn error_bounds_are_sound(a in admissible_composition(1..=3, 4), n in 0u64..=4, digits in 15u32..=40) {
        let x = sigma_tail(&a, n, digits).unwrap();
        let y = sigma_tail(&a, n, digits + 10).unwrap();
        prop_assert!((x.value() - y.value()).abs() <= x.abs_error() + y.abs_error());
        prop_assert!(x.error_below(digits));
        let c = DualityClass::of(&a).unwrap();
        let x = zeta_sym_tail(&c, n, digits).unwrap();
        let y = zeta_sym_tail(&c, n, digits + 10).unwrap();
        prop_assert!((x.value() - y.value()).abs() <= x.abs_error() + y.abs_error());
        prop_assert!(x.error_below(digits));
    }

    #[test]
    fn integer_entry_reduction(a in proptest::collection::vec(-2i64..=3, 1..=3), n in 0u64..=2) {
        let oracle = match sigma_oracle(&a, n, 20) {
            Ok(v) => v,
            Err(_) => return Err(TestCaseError::reject("oracle budget")),
        };
        let l = reduce_integer_entries(&a).unwrap();
        let x = eval_poly_lincomb(&l, n, 30).unwrap();
        prop_assert!(x.truncate(oracle.prec()).overlaps(&oracle), "{:?} at n = {}: {}", a, n, l);
    }
}
