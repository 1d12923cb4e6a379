//! Dense homogeneous forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{same_field, Field, Fp, Q};
use crate::monomial::{self, Exponents};

/// Variable alphabet of a form.
///
/// `X` is the primal alphabet (forms such as the cubic `f`), `Y` the dual
/// alphabet of differential operators (`y_i` acts as `d/dx_i`), and `Z` the
/// alphabet of plane coordinates and of ternary forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    X,
    Y,
    Z,
}

impl Alphabet {
    pub fn letter(self) -> char {
        match self {
            Alphabet::X => 'x',
            Alphabet::Y => 'y',
            Alphabet::Z => 'z',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'x' => Some(Alphabet::X),
            'y' => Some(Alphabet::Y),
            'z' => Some(Alphabet::Z),
            _ => None,
        }
    }

    /// Variable count assumed when a text form does not say otherwise.
    pub fn default_num_vars(self) -> usize {
        match self {
            Alphabet::X | Alphabet::Y => 6,
            Alphabet::Z => 3,
        }
    }

    /// The alphabet paired with this one by the apolarity action.
    pub fn dual(self) -> Self {
        match self {
            Alphabet::X => Alphabet::Y,
            Alphabet::Y => Alphabet::X,
            Alphabet::Z => Alphabet::Z,
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A form of fixed degree in `num_vars` variables, stored as a dense
/// coefficient vector over the graded-lex descending monomial basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousForm<F: Field> {
    ctx: F::Ctx,
    alphabet: Alphabet,
    num_vars: usize,
    degree: usize,
    coeffs: Vec<F>,
}

impl<F: Field> HomogeneousForm<F> {
    pub fn new(ctx: &F::Ctx, alphabet: Alphabet, num_vars: usize, degree: usize, coeffs: Vec<F>) -> Result<Self> {
        let expected = monomial::count(num_vars, degree);
        if coeffs.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a degree-{degree} form in {num_vars} variables (need {expected})",
                coeffs.len()
            )));
        }
        for c in &coeffs {
            same_field::<F>(ctx, &c.ctx())?;
        }
        Ok(HomogeneousForm { ctx: ctx.clone(), alphabet, num_vars, degree, coeffs })
    }

    pub fn zero(ctx: &F::Ctx, alphabet: Alphabet, num_vars: usize, degree: usize) -> Self {
        let coeffs = vec![F::zero(ctx); monomial::count(num_vars, degree)];
        HomogeneousForm { ctx: ctx.clone(), alphabet, num_vars, degree, coeffs }
    }

    pub fn constant(ctx: &F::Ctx, alphabet: Alphabet, num_vars: usize, c: F) -> Self {
        HomogeneousForm { ctx: ctx.clone(), alphabet, num_vars, degree: 0, coeffs: vec![c] }
    }

    pub fn monomial(ctx: &F::Ctx, alphabet: Alphabet, exps: &[u32], c: F) -> Self {
        let mut f = Self::zero(ctx, alphabet, exps.len(), monomial::degree(exps));
        f.coeffs[monomial::index_of(exps)] = c;
        f
    }

    pub fn variable(ctx: &F::Ctx, alphabet: Alphabet, num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(ctx, alphabet, &e, F::one(ctx))
    }

    /// The linear form `sum_i c_i v_i`.
    pub fn linear(ctx: &F::Ctx, alphabet: Alphabet, c: &[F]) -> Self {
        HomogeneousForm { ctx: ctx.clone(), alphabet, num_vars: c.len(), degree: 1, coeffs: c.to_vec() }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, exps: &[u32]) -> &F {
        &self.coeffs[monomial::index_of(exps)]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F::is_zero)
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> Vec<(Exponents, F)> {
        let basis = monomial::basis(self.num_vars, self.degree);
        self.coeffs
            .iter()
            .zip(basis.iter())
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, e)| (e.clone(), c.clone()))
            .collect()
    }

    /// Same coefficients under another alphabet name.
    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet = alphabet;
        self
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        same_field::<F>(&self.ctx, &other.ctx)?;
        if self.num_vars != other.num_vars {
            return Err(Error::VarCountMismatch { expected: self.num_vars, got: other.num_vars });
        }
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch(format!("{} vs {}", self.alphabet, other.alphabet)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, got: other.degree });
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect();
        Ok(HomogeneousForm { coeffs, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        HomogeneousForm { coeffs: self.coeffs.iter().map(F::neg).collect(), ..self.clone() }
    }

    pub fn scale(&self, s: &F) -> Self {
        HomogeneousForm { coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.num_vars;
        let degree = self.degree + other.degree;
        let mut out = Self::zero(&self.ctx, self.alphabet, n, degree);
        let ba = monomial::basis(n, self.degree);
        let bb = monomial::basis(n, other.degree);
        let mut e = vec![0u32; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for k in 0..n {
                    e[k] = ba[i][k] + bb[j][k];
                }
                let idx = monomial::index_of(&e);
                out.coeffs[idx] = out.coeffs[idx].add(&a.mul(b));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        let mut acc = Self::constant(&self.ctx, self.alphabet, self.num_vars, F::one(&self.ctx));
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        if point.len() != self.num_vars {
            return Err(Error::VarCountMismatch { expected: self.num_vars, got: point.len() });
        }
        for x in point {
            same_field::<F>(&self.ctx, &x.ctx())?;
        }
        // powers[i][k] = point[i]^k
        let powers: Vec<Vec<F>> = point
            .iter()
            .map(|x| {
                let mut v = Vec::with_capacity(self.degree + 1);
                v.push(F::one(&self.ctx));
                for k in 1..=self.degree {
                    let next = v[k - 1].mul(x);
                    v.push(next);
                }
                v
            })
            .collect();
        let basis = monomial::basis(self.num_vars, self.degree);
        let mut acc = F::zero(&self.ctx);
        for (c, e) in self.coeffs.iter().zip(basis.iter()) {
            if c.is_zero() {
                continue;
            }
            let mut t = c.clone();
            for (i, &ei) in e.iter().enumerate() {
                if ei > 0 {
                    t = t.mul(&powers[i][ei as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        if self.degree == 0 {
            return Self::zero(&self.ctx, self.alphabet, self.num_vars, 0);
        }
        let mut out = Self::zero(&self.ctx, self.alphabet, self.num_vars, self.degree - 1);
        let basis = monomial::basis(self.num_vars, self.degree);
        for (c, e) in self.coeffs.iter().zip(basis.iter()) {
            if c.is_zero() || e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.coeffs[monomial::index_of(&d)] = c.mul(&F::from_i64(&self.ctx, e[i] as i64));
        }
        out
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.num_vars).map(|i| self.partial(i)).collect()
    }

    /// Replaces variable `i` by the linear form `subst[i]`.
    pub fn substitute(&self, subst: &[HomogeneousForm<F>]) -> Result<Self> {
        for (index, s) in subst.iter().enumerate() {
            if s.degree != 1 {
                return Err(Error::NonLinearSubstituent { index, degree: s.degree });
            }
        }
        self.compose(subst)
    }

    /// Replaces variable `i` by `subst[i]`; all substituents share one degree `e`
    /// and the result has degree `e * deg f`.
    pub fn compose(&self, subst: &[HomogeneousForm<F>]) -> Result<Self> {
        if subst.len() != self.num_vars {
            return Err(Error::VarCountMismatch { expected: self.num_vars, got: subst.len() });
        }
        let first = subst.first().ok_or_else(|| Error::Precondition("empty substitution".into()))?;
        let (target_n, target_alpha, e) = (first.num_vars, first.alphabet, first.degree);
        for s in subst {
            same_field::<F>(&self.ctx, &s.ctx)?;
            if s.num_vars != target_n {
                return Err(Error::VarCountMismatch { expected: target_n, got: s.num_vars });
            }
            if s.alphabet != target_alpha {
                return Err(Error::AlphabetMismatch(format!("{} vs {}", s.alphabet, target_alpha)));
            }
            if s.degree != e {
                return Err(Error::DegreeMismatch { expected: e, got: s.degree });
            }
        }
        // powers[i][k] = subst[i]^k
        let one = Self::constant(&self.ctx, target_alpha, target_n, F::one(&self.ctx));
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(self.num_vars);
        for s in subst {
            let mut v = vec![one.clone()];
            for k in 1..=self.degree {
                let next = v[k - 1].mul(s)?;
                v.push(next);
            }
            powers.push(v);
        }
        let mut out = Self::zero(&self.ctx, target_alpha, target_n, self.degree * e);
        let basis = monomial::basis(self.num_vars, self.degree);
        for (c, exps) in self.coeffs.iter().zip(basis.iter()) {
            if c.is_zero() {
                continue;
            }
            let mut t = one.scale(c);
            for (i, &ei) in exps.iter().enumerate() {
                if ei > 0 {
                    t = t.mul(&powers[i][ei as usize])?;
                }
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    /// Coefficientwise image in another field.
    pub fn map_field<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> Result<G>) -> Result<HomogeneousForm<G>> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<G>>>()?;
        Ok(HomogeneousForm {
            ctx: ctx.clone(),
            alphabet: self.alphabet,
            num_vars: self.num_vars,
            degree: self.degree,
            coeffs,
        })
    }

    /// The first nonzero coefficient in basis order.
    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Scales so the leading coefficient is 1; the zero form is returned unchanged.
    pub fn normalized(&self) -> Self {
        match self.leading_coeff().and_then(F::inv) {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn is_proportional_to(&self, other: &Self) -> bool {
        self.check_compatible(other).is_ok()
            && self.degree == other.degree
            && !self.is_zero()
            && !other.is_zero()
            && self.normalized() == other.normalized()
    }
}

impl HomogeneousForm<Q> {
    /// Coefficientwise reduction modulo `p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<HomogeneousForm<Fp>> {
        self.map_field(&p, |c| Fp::from_ratio(&p, c.as_ratio()))
    }

    /// Image in any field.
    pub fn to_field<G: Field>(&self, ctx: &G::Ctx) -> Result<HomogeneousForm<G>> {
        self.map_field(ctx, |c| G::from_ratio(ctx, c.as_ratio()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_form, ParseOptions};

    fn q(s: &str) -> HomogeneousForm<Q> {
        parse_form(&(), s, ParseOptions { num_vars: Some(3), ..Default::default() }).unwrap()
    }

    #[test]
    fn products_and_powers() {
        assert_eq!(q("x0+x1").mul(&q("x0-x1")).unwrap(), q("x0^2-x1^2"));
        assert_eq!(q("x0+x1").pow(3).unwrap(), q("x0^3+3*x0^2*x1+3*x0*x1^2+x1^3"));
        assert_eq!(q("x0+x1").pow(0).unwrap().degree(), 0);
        assert!(q("x0").mul(&q("y0")).is_err());
    }

    #[test]
    fn euler_identity() {
        let f = q("x0^3-2*x0*x1*x2+5*x2^3");
        let mut acc = HomogeneousForm::zero(&(), Alphabet::X, 3, 3);
        for i in 0..3 {
            acc = acc.add(&HomogeneousForm::variable(&(), Alphabet::X, 3, i).mul(&f.partial(i)).unwrap()).unwrap();
        }
        assert_eq!(acc, f.scale(&Q::from_i64(&(), 3)));
    }

    #[test]
    fn evaluation() {
        let f = q("x0^2*x1-x2^3");
        let pt = [Q::from_i64(&(), 2), Q::from_i64(&(), 3), Q::from_i64(&(), 1)];
        assert_eq!(f.evaluate(&pt).unwrap(), Q::from_i64(&(), 11));
        assert!(f.evaluate(&pt[..2]).is_err());
    }

    #[test]
    fn compose_with_quadrics_and_linear_forms() {
        let f = q("x0*x2-x1^2");
        let ctx = ();
        let a = |s: &str| parse_form::<Q>(&ctx, s, ParseOptions { num_vars: Some(2), ..ParseOptions::alphabet(Alphabet::Z) }).unwrap();
        // the conic vanishes on its parametrization
        let par = [a("z0^2"), a("z0*z1"), a("z1^2")];
        assert!(f.compose(&par).unwrap().is_zero());
        let lin = [a("z0+z1"), a("z0"), a("z1")];
        assert_eq!(f.substitute(&lin).unwrap(), a("-z0^2+z0*z1+z1^2"));
        assert!(matches!(f.substitute(&par), Err(Error::NonLinearSubstituent { index: 0, degree: 2 })));
        assert!(f.compose(&[a("z0"), a("z1^2"), a("z1")]).is_err());
        assert!(f.compose(&lin[..2]).is_err());
    }

    #[test]
    fn normalization_and_proportionality() {
        let f = q("2*x0^2-4*x1^2");
        assert_eq!(f.normalized(), q("x0^2-2*x1^2"));
        assert!(f.is_proportional_to(&q("-x0^2+2*x1^2")));
        assert!(!f.is_proportional_to(&q("x0^2+2*x1^2")));
        let zero = HomogeneousForm::<Q>::zero(&(), Alphabet::X, 3, 2);
        assert!(!zero.is_proportional_to(&zero));
    }

    #[test]
    fn reduction_mod_p() {
        let f = q("1/2*x0^2+3*x1^2");
        let g = f.reduce_mod_p(7).unwrap();
        assert_eq!(g.coeff(&[2, 0, 0]).value(), 4);
        assert_eq!(g.coeff(&[0, 2, 0]).value(), 3);
        assert!(matches!(q("1/7*x0").reduce_mod_p(7), Err(Error::DenominatorDivisibleByP { .. })));
    }
}
