use apery_core::compositions::{admissible, all_compositions, classes, even_entries};
use apery_core::delta::families::{c_b, even_alternating, selfdual_t4, t_family, t_minus_one_displayed, t_minus_two_displayed};
use apery_core::delta::{delta_class, delta_explicit_rep, delta_inductive};
use apery_core::exact_linalg::delta_k_matrix;
use apery_core::lincomb::{alpha, alpha_parts, class_projection, coefficient_sum, mu, mu_invert};
use apery_core::stuffle::{boxast, boxast_lin, phi, phi_single, stuffle, stuffle_lin};
use apery_core::{Composition, DualityClass, ExactMatrix, LinComb};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

type Z = LinComb<Composition, BigInt>;

fn comp(s: &str) -> Composition {
    s.parse().unwrap()
}

fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

fn parts_class(a: &Composition) -> LinComb<DualityClass, BigInt> {
    alpha_parts(a).unwrap().iter().map(|p| (DualityClass::of(p).unwrap(), int(1))).collect()
}

#[test]
fn alpha_respects_duality() {
    for k in 1..=12 {
        for c in classes(k) {
            let members = c.members();
            let via_rep = parts_class(&members[0]);
            assert_eq!(via_rep, parts_class(members.last().unwrap()), "[{c}]");
            assert_eq!(alpha(&LinComb::single(c.clone(), int(1))).unwrap(), via_rep);
        }
    }
}

#[test]
fn mixed_weight_kernel_element() {
    let l: Z = [(comp("2,1,3"), int(1)), (comp("2,1,2"), int(-2)), (comp("2,2"), int(1))].into_iter().collect();
    let classes_l = class_projection(&l).unwrap();
    assert!(alpha(&classes_l).unwrap().is_zero());
    let homogeneous = classes_l.grade_split();
    assert!(homogeneous.values().any(|part| !alpha(part).unwrap().is_zero()));
}

#[test]
fn alpha_triples_coefficient_sum() {
    let l: LinComb<DualityClass, BigInt> =
        classes(7).into_iter().enumerate().map(|(i, c)| (c, int(i as i64 - 5))).collect();
    let image = alpha(&l).unwrap();
    assert_eq!(coefficient_sum(&image), int(3) * coefficient_sum(&l));
}

#[test]
fn functional_equation() {
    for k in 1..=12 {
        for a in admissible(k) {
            let lhs = mu(delta_class(&DualityClass::of(&a).unwrap()).as_ref()).unwrap();
            let rhs = delta_inductive(&parts_class(&a));
            assert_eq!(lhs, rhs, "({a})");
        }
    }
}

#[test]
fn explicit_formula_on_both_members() {
    for k in 2..=10 {
        for c in classes(k) {
            let members = c.members();
            assert_eq!(
                delta_explicit_rep(&members[0]).unwrap(),
                delta_explicit_rep(members.last().unwrap()).unwrap(),
                "[{c}]"
            );
        }
    }
}

#[test]
fn two_three_entry_bound() {
    for k in 2..=12 {
        for a in admissible(k).into_iter().filter(|a| a.entries().iter().all(|&e| e == 2 || e == 3)) {
            let s = a.entries().iter().filter(|&&e| e == 3).count();
            for b in delta_class(&DualityClass::of(&a).unwrap()).support() {
                assert!(b.entries().iter().all(|&e| e <= 5), "({b}) in delta([{a}])");
                assert!(b.entries().iter().filter(|&&e| e % 2 == 1).count() <= s, "({b}) in delta([{a}])");
            }
        }
    }
}

#[test]
fn t_family_specialisations() {
    for k in (2..=10).step_by(2) {
        let poly = t_family(k).unwrap();
        let at = |t: i64| poly.map(|p| p.eval(&int(t)));
        assert_eq!(at(1), even_alternating(k).unwrap(), "t = 1, k = {k}");
        let four = selfdual_t4(k / 2).unwrap().map(|x| x * int(4));
        assert_eq!(at(4), four, "t = 4, k = {k}");
        assert_eq!(at(-1), t_minus_one_displayed(k).unwrap(), "t = -1, k = {k}");
        assert_eq!(at(-2), t_minus_two_displayed(k).unwrap(), "t = -2, k = {k}");
    }
}

#[test]
fn height_graded_images_are_independent() {
    for k in (2..=12).step_by(2) {
        let h_max = (k / 2) as usize;
        let rows: Vec<Vec<BigInt>> = even_entries(k)
            .iter()
            .map(|b| {
                let c = c_b(b);
                (1..=h_max).map(|h| c.coeffs().get(h).cloned().unwrap_or_default()).collect()
            })
            .collect();
        let m = ExactMatrix::from_rows(rows, h_max).unwrap();
        assert_eq!(m.rank(), h_max, "weight {k}");
    }
}

#[test]
fn restricted_injectivity() {
    for k in 2..=12 {
        let cls = classes(k);
        let m = delta_k_matrix(k);
        for keep in [|e: u8| e >= 2, |e: u8| e <= 2] {
            let cols: Vec<usize> = (0..cls.len())
                .filter(|&j| cls[j].members().iter().any(|a| a.entries().iter().all(|&e| keep(e))))
                .collect();
            let rows: Vec<usize> = (0..m.rows()).collect();
            let sub: ExactMatrix = m.submatrix(&rows, &cols);
            assert_eq!(sub.rank(), cols.len(), "weight {k}");
        }
    }
}

#[test]
fn modified_stuffle_example() {
    let two = comp("2");
    let l = boxast(&two, &two).map_coeffs(|x| BigRational::from_integer(x.clone()));
    let single = phi_single(1, 3, &two).unwrap();
    assert_eq!(phi(1, 3, &l).unwrap(), &single * &single);
}

fn composition(max_weight: u32) -> impl Strategy<Value = Composition> {
    proptest::collection::vec(1u32..=4, 0..5).prop_filter_map("weight cap", move |v| {
        (v.iter().sum::<u32>() <= max_weight).then(|| Composition::new(&v).unwrap())
    })
}

fn lin(a: &Composition) -> Z {
    LinComb::single(a.clone(), int(1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_commute_and_associate(a in composition(8), b in composition(8), c in composition(8)) {
        prop_assert_eq!(stuffle(&a, &b), stuffle(&b, &a));
        prop_assert_eq!(boxast(&a, &b), boxast(&b, &a));
        let (la, lb, lc) = (lin(&a), lin(&b), lin(&c));
        prop_assert_eq!(stuffle_lin(&stuffle_lin(&la, &lb), &lc), stuffle_lin(&la, &stuffle_lin(&lb, &lc)));
        prop_assert_eq!(boxast_lin(&boxast_lin(&la, &lb), &lc), boxast_lin(&la, &boxast_lin(&lb, &lc)));
    }

    #[test]
    fn stuffle_depth_bound(a in composition(10), b in composition(10)) {
        let (lo, hi) = (a.depth().max(b.depth()), a.depth() + b.depth());
        for c in stuffle(&a, &b).support() {
            prop_assert!(lo <= c.depth() && c.depth() <= hi);
        }
    }

    #[test]
    fn mu_is_injective(k in 2u32..=12, picks in proptest::collection::vec((any::<prop::sample::Index>(), -20i64..=20), 1..6)) {
        let pool = admissible(k);
        let l: Z = picks.iter().map(|(i, c)| (i.get(&pool).clone(), int(*c))).collect();
        prop_assert_eq!(mu_invert(&mu(&l).unwrap(), k).unwrap(), l);
    }
}

#[test]
fn all_compositions_counts() {
    for k in 1..=10 {
        assert_eq!(all_compositions(k).len(), 1 << (k - 1));
    }
}
