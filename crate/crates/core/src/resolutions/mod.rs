//! Koszul homology, Betti tables, linear syzygies and matrices of linear forms.

mod betti;
mod graded;
mod linear;
mod syzygies;

pub use betti::{full_betti, graded_betti, koszul_differential, BettiTable};
pub use graded::{GradedIdeal, GradedQuotient};
pub use linear::LinearFormMatrix;
pub use syzygies::{
    first_syzygies, generic_cubic_betti, linear_strand, linear_syzygies, m2_matrix, second_syzygies, strand_betti,
    LinearStrand,
};

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::apolarity::{ideal_of_points_component, q_f, PointSet};
    use crate::field::{Field, Fp, Q};
    use crate::form::{Alphabet, HomogeneousForm};
    use crate::matrix::Matrix;
    use crate::monomial;
    use crate::text::{parse_form, ParseOptions};

    fn random_cubic<F: Field>(ctx: &F::Ctx, seed: u64) -> HomogeneousForm<F> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = (0..monomial::count(6, 3)).map(|_| F::random(ctx, &mut rng)).collect();
        HomogeneousForm::new(ctx, Alphabet::X, 6, 3, c).unwrap()
    }

    #[test]
    fn one_point_gives_koszul_binomials() {
        let p = PointSet::new(&(), vec![vec![Q::from_frac(1, 1), Q::from_frac(0, 1), Q::from_frac(0, 1), Q::from_frac(0, 1), Q::from_frac(0, 1), Q::from_frac(0, 1)]]).unwrap();
        let a = GradedQuotient::of_points(&p, 7).unwrap();
        let t = graded_betti(&a, 6, 6).unwrap();
        let expected = BettiTable::from_entries((0..=5).map(|i| (i, i, monomial::binomial(5, i))));
        assert_eq!(t, expected);
    }

    #[test]
    fn random_cubic_has_the_generic_table() {
        let f = random_cubic::<Fp>(&32003, 1);
        let a = GradedQuotient::apolar_algebra(&f).unwrap();
        assert_eq!(a.hilbert_function(), &[1, 6, 6, 1]);
        let t = full_betti(&a).unwrap();
        assert_eq!(t, generic_cubic_betti());
        for (i, j, b) in t.entries() {
            assert_eq!(t.get(6 - i, 9 - j), b);
        }
    }

    #[test]
    fn quotient_from_ideal_agrees_with_apolar_algebra() {
        let f = random_cubic::<Fp>(&101, 2);
        let pieces = (0..=4).map(|k| crate::apolarity::apolar_ideal_component(&f, k).unwrap()).collect();
        let ideal = GradedIdeal::new(&101, 6, pieces).unwrap();
        let a = GradedQuotient::from_ideal(&ideal).unwrap();
        assert_eq!(a.hilbert_function(), &[1, 6, 6, 1, 0]);
        assert_eq!(graded_betti(&a, 3, 4).unwrap(), generic_cubic_betti().window(3, 4));
    }

    #[test]
    fn ideal_pieces_must_be_closed_under_multiplication() {
        let y0 = parse_form::<Q>(&(), "y0", ParseOptions::default()).unwrap();
        let bad = vec![
            crate::matrix::Subspace::zero(&(), crate::matrix::Ambient::graded(6, 0)),
            crate::apolarity::span_of(&(), 6, 1, &[y0]).unwrap(),
            crate::matrix::Subspace::zero(&(), crate::matrix::Ambient::graded(6, 2)),
        ];
        assert!(GradedIdeal::new(&(), 6, bad).is_err());
    }

    #[test]
    fn koszul_differentials_compose_to_zero() {
        let f = random_cubic::<Fp>(&101, 3);
        let a = GradedQuotient::apolar_algebra(&f).unwrap();
        for i in 2..=6 {
            for k in 0..2 {
                let d1 = koszul_differential(&a, i, k).unwrap();
                let d2 = koszul_differential(&a, i - 1, k + 1).unwrap();
                assert!(d1.mul(&d2).unwrap().is_zero(), "i={i} k={k}");
            }
        }
    }

    #[test]
    fn missing_pieces_are_reported() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let z = PointSet::<Fp>::random(&101, 6, 10, &mut rng);
        let a = GradedQuotient::of_points(&z, 3).unwrap();
        assert!(matches!(graded_betti(&a, 5, 7), Err(crate::Error::MissingPiece { .. })));
    }

    #[test]
    fn ten_points_linear_strand() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let z = PointSet::<Fp>::random(&32003, 6, 10, &mut rng);
        let q = crate::apolarity::basis_forms(&ideal_of_points_component(&z, 2), Alphabet::Y).unwrap();
        assert_eq!(q.len(), 11);
        assert_eq!(linear_syzygies(&q, 1).unwrap().dim(), 20);
        assert_eq!(linear_syzygies(&q, 2).unwrap().dim(), 5);
    }

    #[test]
    fn two_coprime_squares_have_one_koszul_syzygy() {
        let q: Vec<_> = ["y0^2", "y1^2"].iter().map(|s| parse_form::<Q>(&(), s, ParseOptions::default()).unwrap()).collect();
        // the Koszul syzygy is quadratic, so there is no linear one
        assert_eq!(linear_syzygies(&q, 1).unwrap().dim(), 0);
        assert_eq!(strand_betti(&q).unwrap().get(2, 4), 1);
        assert!(matches!(linear_syzygies(&q, 2), Err(crate::Error::BettiShape(_))));
    }

    #[test]
    fn m2_shape_and_rank_over_a_prime_field() {
        let f = random_cubic::<Fp>(&32003, 6);
        assert_eq!(q_f(&f).unwrap().dim(), 15);
        let m = m2_matrix(&f, None).unwrap();
        assert_eq!((m.rows(), m.cols()), (35, 21));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pt: Vec<Fp> = (0..6).map(|_| Fp::random(&32003, &mut rng)).collect();
        assert_eq!(m.rank_at_point(&pt).unwrap(), 21);
        let m2 = m2_matrix(&f, Some(9)).unwrap();
        assert_ne!(m, m2);
        assert_eq!(m2.rank_at_point(&pt).unwrap(), 21);
    }

    #[test]
    fn basis_change_keeps_the_drop_on_the_veronese() {
        let f = crate::constructions::family_f_example::<Q>(&());
        let (m, m2) = (m2_matrix(&f, None).unwrap(), m2_matrix(&f, Some(3)).unwrap());
        let a = [Q::from_i64(&(), 2), Q::from_i64(&(), -1), Q::from_i64(&(), 3)];
        let v = crate::constructions::veronese_point(&a);
        assert_eq!(m.rank_at_point(&v).unwrap(), 20);
        assert_eq!(m2.rank_at_point(&v).unwrap(), 20);
    }

    #[test]
    fn linear_form_matrix_json_and_restriction() {
        let ctx = 101u64;
        let e = |s: &str| parse_form::<Fp>(&ctx, s, ParseOptions { num_vars: Some(3), degree: Some(1), ..Default::default() }).unwrap();
        let m = LinearFormMatrix::from_entries(&ctx, &[vec![e("z0"), e("0")], vec![e("z1-z2"), e("2*z2")]]).unwrap();
        let back = LinearFormMatrix::<Fp>::from_json(&ctx, &m.to_json()).unwrap();
        assert_eq!(back, m);
        let id: Vec<_> = (0..3).map(|i| HomogeneousForm::variable(&ctx, Alphabet::Z, 3, i)).collect();
        assert_eq!(m.restrict(&id).unwrap(), m);
        assert_eq!(m.rank_at_point(&[Fp::new(0, ctx), Fp::new(1, ctx), Fp::new(1, ctx)]).unwrap(), 1);
        let zero = LinearFormMatrix::from_coefficients(&ctx, Alphabet::Z, vec![Matrix::zeros(&ctx, 2, 2); 3]).unwrap();
        assert_eq!(zero.rank_at_point(&[Fp::new(1, ctx), Fp::new(2, ctx), Fp::new(3, ctx)]).unwrap(), 0);
    }

    #[test]
    fn betti_json_and_text() {
        let t = BettiTable::from_rows(&[&[(0, 1)], &[(1, 12), (2, 25), (3, 15)], &[(3, 6), (4, 10), (5, 3)]]);
        let v = t.to_json();
        assert_eq!(v["entries"][1], serde_json::json!([1, 2, 12]));
        let back: BettiTable = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
        let text = t.render();
        assert!(text.contains("1:  - 12 25 15  -  -"), "{text}");
    }
}
