//! Text grammar for forms.
//!
//! A form is a signed sum of terms `c*v^e*v^e...`. Coefficients are integers,
//! fractions `p/q`, or (over `F_{p^2}`) parenthesised `(a+b*w)`. Variables are
//! `x0..`, `y0..` and `z0..`; an underscore after the letter is accepted and
//! `*` may be omitted between factors. Whitespace is ignored.
//!
//! Printing lists terms in basis order (graded-lex descending), drops unit
//! coefficients, and writes signs between terms, so `parse(print(f)) == f`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::form::{Alphabet, HomogeneousForm};
use crate::monomial;

/// Hints for quantities a text form may not determine by itself.
#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    pub alphabet: Option<Alphabet>,
    pub num_vars: Option<usize>,
    /// Degree of the zero form.
    pub degree: Option<usize>,
}

impl ParseOptions {
    pub fn alphabet(alphabet: Alphabet) -> Self {
        ParseOptions { alphabet: Some(alphabet), ..Default::default() }
    }
}

struct Term {
    re: BigRational,
    im: BigRational,
    vars: Vec<(Alphabet, usize, u32, usize)>,
    pos: usize,
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(txt.parse().expect("digits parse"))
    }

    fn small(&mut self) -> Result<usize> {
        let start = self.pos;
        let n = self.digits()?;
        usize::try_from(n).or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn ratio(&mut self) -> Result<BigRational> {
        let n = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.digits()?;
            if d.is_zero() {
                return self.err("zero denominator");
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }

    /// `( [±] item [± item]* )` where an item is `r`, `r*w`, `r w` or `w`.
    fn ext(&mut self) -> Result<(BigRational, BigRational)> {
        self.pos += 1; // '('
        let mut re = BigRational::zero();
        let mut im = BigRational::zero();
        let mut first = true;
        loop {
            let mut neg = false;
            match self.peek() {
                Some(b')') if !first => {
                    self.pos += 1;
                    return Ok((re, im));
                }
                Some(b'+') => self.pos += 1,
                Some(b'-') => {
                    self.pos += 1;
                    neg = true;
                }
                _ if first => {}
                Some(_) => return self.err("expected '+', '-' or ')'"),
                None => return self.err("unterminated '('"),
            }
            first = false;
            let mut c = BigRational::one();
            let mut is_w = false;
            if matches!(self.peek(), Some(b'0'..=b'9')) {
                c = self.ratio()?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                }
            }
            if self.peek() == Some(b'w') {
                self.pos += 1;
                is_w = true;
            }
            if neg {
                c = -c;
            }
            if is_w {
                im += c;
            } else {
                re += c;
            }
        }
    }

    fn term(&mut self, neg: bool) -> Result<Term> {
        let pos = self.pos;
        let mut re = BigRational::one();
        let mut im = BigRational::zero();
        let mut vars = Vec::new();
        let mut items = 0;
        loop {
            match self.peek() {
                Some(b'0'..=b'9') => {
                    let r = self.ratio()?;
                    re *= &r;
                    im *= &r;
                }
                Some(b'(') => {
                    let (a, b) = self.ext()?;
                    if !im.is_zero() && !b.is_zero() {
                        return self.err("product of two extension coefficients is not supported");
                    }
                    let nim = &re * &b + &im * &a;
                    re *= &a;
                    im = nim;
                }
                Some(c) if Alphabet::from_letter(c as char).is_some() => {
                    let vpos = self.pos;
                    self.pos += 1;
                    if self.s.get(self.pos) == Some(&b'_') {
                        self.pos += 1;
                    }
                    let idx = self.small()?;
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = u32::try_from(self.small()?).or_else(|_| self.err("exponent too large"))?;
                    }
                    vars.push((Alphabet::from_letter(c as char).expect("checked"), idx, e, vpos));
                }
                _ => {
                    if items == 0 {
                        return self.err("expected a coefficient or a variable");
                    }
                    break;
                }
            }
            items += 1;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if !matches!(self.peek(), Some(b'0'..=b'9' | b'(' | b'x' | b'y' | b'z')) {
                    return self.err("expected a factor after '*'");
                }
            }
        }
        if neg {
            re = -re;
            im = -im;
        }
        Ok(Term { re, im, vars, pos })
    }
}

/// Parses a form over the field `ctx`.
pub fn parse_form<F: Field>(ctx: &F::Ctx, src: &str, opts: ParseOptions) -> Result<HomogeneousForm<F>> {
    let mut lx = Lexer { s: src.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    while lx.peek().is_some() {
        let mut neg = false;
        let mut saw_sign = false;
        while let Some(c @ (b'+' | b'-')) = lx.peek() {
            lx.pos += 1;
            saw_sign = true;
            if c == b'-' {
                neg = !neg;
            }
        }
        if !first && !saw_sign {
            return lx.err("expected '+' or '-' between terms");
        }
        first = false;
        terms.push(lx.term(neg)?);
    }
    if terms.is_empty() {
        return lx.err("empty input");
    }

    let mut alphabet = opts.alphabet;
    for t in &terms {
        for &(a, _, _, pos) in &t.vars {
            match alphabet {
                None => alphabet = Some(a),
                Some(b) if b != a => {
                    return Err(Error::Parse { pos, msg: format!("variable alphabet {a} mixed with {b}") })
                }
                _ => {}
            }
        }
    }
    let alphabet = alphabet.unwrap_or(Alphabet::X);
    let num_vars = opts.num_vars.unwrap_or(alphabet.default_num_vars());

    let mut degree = None;
    let mut monos = Vec::with_capacity(terms.len());
    for t in &terms {
        let mut e = vec![0u32; num_vars];
        for &(_, idx, ex, pos) in &t.vars {
            if idx >= num_vars {
                return Err(Error::Parse { pos, msg: format!("variable index {idx} outside 0..{num_vars}") });
            }
            e[idx] += ex;
        }
        let d = monomial::degree(&e);
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => {
                return Err(Error::Parse { pos: t.pos, msg: format!("term of degree {d} in a form of degree {d0}") })
            }
            _ => {}
        }
        monos.push(e);
    }
    let degree = match (degree, opts.degree) {
        // a lone constant zero takes the requested degree
        (Some(0), Some(d)) if terms.iter().all(|t| t.re.is_zero() && t.im.is_zero()) => d,
        (Some(d), _) => d,
        (None, d) => d.unwrap_or(0),
    };
    let mut coeffs = vec![F::zero(ctx); monomial::count(num_vars, degree)];
    for (t, e) in terms.iter().zip(&monos) {
        if monomial::degree(e) != degree {
            continue;
        }
        let c = F::from_ext_pair(ctx, &t.re, &t.im).map_err(|err| match err {
            Error::Parse { msg, .. } => Error::Parse { pos: t.pos, msg },
            other => other,
        })?;
        let i = monomial::index_of(e);
        coeffs[i] = coeffs[i].add(&c);
    }
    HomogeneousForm::new(ctx, alphabet, num_vars, degree, coeffs)
}

impl<F: Field> fmt::Display for HomogeneousForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative_repr();
            let abs = if neg { c.neg() } else { c.clone() };
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let is_const = e.iter().all(|&x| x == 0);
            let mut need_star = false;
            if is_const || !abs.is_one() {
                write!(f, "{abs}")?;
                need_star = true;
            }
            for (i, &ex) in e.iter().enumerate() {
                if ex == 0 {
                    continue;
                }
                if need_star {
                    write!(f, "*")?;
                }
                write!(f, "{}{}", self.alphabet().letter(), i)?;
                if ex > 1 {
                    write!(f, "^{ex}")?;
                }
                need_star = true;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
