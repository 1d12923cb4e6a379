use apolarkit::apolarity::{
    apolar_action, apolar_ideal_component, catalecticant, hilbert_function, is_apolar_pointset, is_in_power_span,
    PointSet,
};
use apolarkit::constructions::{family_f, m_star, power_sum, s_map, veronese_ideal_quadrics};
use apolarkit::resolutions::{full_betti, GradedQuotient};
use apolarkit::text::{parse_form, ParseOptions};
use apolarkit::{Alphabet, Field, Fp, HomogeneousForm, Matrix, Q};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const P: u64 = 32003;

fn random_form<F: Field>(ctx: &F::Ctx, alphabet: Alphabet, n: usize, d: usize, rng: &mut ChaCha8Rng) -> HomogeneousForm<F> {
    let len = apolarkit::monomial::count(n, d);
    HomogeneousForm::new(ctx, alphabet, n, d, (0..len).map(|_| F::random(ctx, rng)).collect()).unwrap()
}

fn sparse_form(ctx: &(), n: usize, d: usize, rng: &mut ChaCha8Rng) -> HomogeneousForm<Q> {
    let len = apolarkit::monomial::count(n, d);
    let coeffs = (0..len)
        .map(|_| if rng.gen_bool(0.3) { Q::random(ctx, rng) } else { Q::zero(ctx) })
        .collect();
    HomogeneousForm::new(ctx, Alphabet::X, n, d, coeffs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(seed in any::<u64>(), n in 1usize..7, d in 0usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = sparse_form(&(), n, d, &mut rng);
        let opts = ParseOptions { alphabet: Some(Alphabet::X), num_vars: Some(n), degree: Some(d) };
        prop_assert_eq!(parse_form::<Q>(&(), &f.to_string(), opts).unwrap(), f.clone());
        let g = random_form::<Fp>(&P, Alphabet::Y, n, d, &mut rng);
        let opts = ParseOptions { alphabet: Some(Alphabet::Y), num_vars: Some(n), degree: Some(d) };
        prop_assert_eq!(parse_form::<Fp>(&P, &g.to_string(), opts).unwrap(), g);
    }

    #[test]
    fn action_is_a_module_structure(seed in any::<u64>(), a in 0usize..3, b in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form::<Fp>(&P, Alphabet::X, 4, 5, &mut rng);
        let d1 = random_form::<Fp>(&P, Alphabet::Y, 4, a, &mut rng);
        let d2 = random_form::<Fp>(&P, Alphabet::Y, 4, b, &mut rng);
        let lhs = apolar_action(&d1.mul(&d2).unwrap(), &f).unwrap();
        let rhs = apolar_action(&d1, &apolar_action(&d2, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hilbert_function_is_invariant_under_linear_changes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // a sum of four cubes in five variables has Hilbert function (1, 4, 4, 1)
        let forms: Vec<_> = (0..4).map(|_| random_form::<Fp>(&P, Alphabet::X, 5, 1, &mut rng)).collect();
        let f = power_sum(&forms, &[Fp::new(1, P), Fp::new(2, P), Fp::new(3, P), Fp::new(4, P)], 3).unwrap();
        let g = Matrix::<Fp>::random_invertible(&P, 5, &mut rng);
        let subst: Vec<_> = (0..5).map(|i| HomogeneousForm::linear(&P, Alphabet::X, g.row(i))).collect();
        let moved = f.substitute(&subst).unwrap();
        prop_assert_eq!(hilbert_function(&f).unwrap(), vec![1, 4, 4, 1]);
        prop_assert_eq!(hilbert_function(&moved).unwrap(), hilbert_function(&f).unwrap());
    }

    #[test]
    fn quadrics_and_catalecticant_rank_add_up(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=7);
        let forms: Vec<_> = (0..k).map(|_| random_form::<Fp>(&P, Alphabet::X, 6, 1, &mut rng)).collect();
        let weights = vec![Fp::new(1, P); k];
        let f = power_sum(&forms, &weights, 3).unwrap();
        let rank = catalecticant(&f, 1).unwrap().rank();
        prop_assert_eq!(apolar_ideal_component(&f, 2).unwrap().dim() + rank, 21);
        prop_assert_eq!(rank, k.min(6));
    }

    #[test]
    fn m_star_inverts_s(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_form::<Fp>(&P, Alphabet::Z, 3, 6, &mut rng);
        prop_assert_eq!(m_star(&s_map(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn family_is_linear(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: [Q; 5] = std::array::from_fn(|_| Q::random(&(), &mut rng));
        let b: [Q; 5] = std::array::from_fn(|_| Q::random(&(), &mut rng));
        let t = Q::random(&(), &mut rng);
        let sum: [Q; 5] = std::array::from_fn(|i| a[i].add(&b[i].mul(&t)));
        let expected = family_f(&(), &a).add(&family_f(&(), &b).scale(&t)).unwrap();
        prop_assert_eq!(family_f(&(), &sum), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    // apolarity of the points against membership in the span of cubes,
    // for power sums (both true) and for random cubics (both false)
    #[test]
    fn apolar_points_iff_sum_of_cubes(seed in any::<u64>(), k in 1usize..=10, summed in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = PointSet::<Fp>::random(&P, 6, k, &mut rng);
        let f = if summed {
            let weights: Vec<Fp> = (0..k).map(|_| Fp::random(&P, &mut rng)).collect();
            power_sum(&z.linear_forms(Alphabet::X), &weights, 3).unwrap()
        } else {
            random_form::<Fp>(&P, Alphabet::X, 6, 3, &mut rng)
        };
        let apolar = is_apolar_pointset(&z, &f).unwrap();
        prop_assert_eq!(apolar, is_in_power_span(&z, &f).unwrap());
        prop_assert_eq!(apolar, summed);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn apolar_betti_tables_are_symmetric(seed in any::<u64>(), n in 2usize..5, d in 2usize..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_form::<Fp>(&P, Alphabet::X, n, d, &mut rng);
        let table = full_betti(&GradedQuotient::apolar_algebra(&f).unwrap()).unwrap();
        prop_assert_eq!(table.get(0, 0), 1);
        prop_assert_eq!(table.get(n, n + d), 1);
        for (i, j, b) in table.entries() {
            prop_assert_eq!(table.get(n - i, n + d - j), b, "b_{{{},{}}}", i, j);
        }
        let h = hilbert_function(&f).unwrap();
        prop_assert!(h.iter().eq(h.iter().rev()));
    }
}

#[test]
fn veronese_parametrization_satisfies_the_minors() {
    let ctx = ();
    let z = |s: &str| parse_form::<Q>(&ctx, s, ParseOptions { num_vars: Some(3), ..ParseOptions::alphabet(Alphabet::Z) }).unwrap();
    let par: Vec<_> = ["z0^2", "z0*z1", "z0*z2", "z1^2", "z1*z2", "z2^2"].iter().map(|s| z(s)).collect();
    for q in veronese_ideal_quadrics::<Q>(&ctx) {
        assert!(q.compose(&par).unwrap().is_zero(), "{q}");
    }
}
