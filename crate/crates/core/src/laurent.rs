//! Sparse multivariate Laurent polynomials over the integers.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors under a fixed
//! monomial order (total degree first, then reverse lexicographic on the
//! exponents), so iteration, equality, hashing, and display are all
//! canonical. Coefficients are arbitrary-precision integers and every
//! operation is exact; division either succeeds exactly or reports that the
//! quotient is not a Laurent polynomial.

use crate::error::Error;
use crate::perm::Permutation;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An exponent vector. Negative entries are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<i64>,
}

impl Monomial {
    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn of(exps: Vec<i64>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial::of(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// Entrywise `self <= other`, i.e. `other / self` has no negative
    /// exponents.
    fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Self) -> Self {
        Monomial::of(self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Lower total degree first; on ties the lexicographically larger
        // exponent vector comes first. Restricted to non-negative exponents
        // this is a monomial order, which the division routine relies on.
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

/// A Laurent polynomial written as `numerator / x^alpha` where the numerator
/// touches exponent zero in every variable it involves. `alpha[i]` may be
/// negative, meaning every term of the original was divisible by `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub numerator: LaurentPoly,
    pub alpha: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, BigInt::one())
    }

    pub fn constant(n: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(n), c);
        }
        LaurentPoly { n, terms }
    }

    pub fn variable(n: usize, i: usize) -> Result<Self, Error> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, rank: n });
        }
        let mut exps = vec![0; n];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::of(exps), BigInt::one());
        Ok(LaurentPoly { n, terms })
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping
    /// zero coefficients.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, BigInt)>,
    ) -> Result<Self, Error> {
        let mut map: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::SizeMismatch { left: n, right: exps.len() });
            }
            let entry = map.entry(Monomial::of(exps)).or_insert_with(BigInt::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { n, terms: map })
    }

    pub fn from_i64_terms(n: usize, terms: &[(&[i64], i64)]) -> Result<Self, Error> {
        Self::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c))))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit(self.n))
                .is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// True when the polynomial is nonzero and every coefficient is positive.
    pub fn has_positive_coefficients(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.is_positive())
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_rank(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Ok(LaurentPoly { n: self.n, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_rank(other)?;
        let mut terms: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = terms.entry(m.clone()).or_insert_with(BigInt::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    terms.remove(&m);
                }
            }
        }
        Ok(LaurentPoly { n: self.n, terms })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("matching rank");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("matching rank");
            }
        }
        acc
    }

    /// Multiplies every term by `c * x^m`.
    fn times_term(&self, m: &Monomial, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    /// The smallest exponent of each variable over all terms. Only meaningful
    /// for nonzero polynomials; returns all-zero for the zero polynomial.
    pub fn min_exponents(&self) -> Vec<i64> {
        let mut mins: Option<Vec<i64>> = None;
        for m in self.terms.keys() {
            match &mut mins {
                None => mins = Some(m.exps().to_vec()),
                Some(v) => {
                    for (slot, e) in v.iter_mut().zip(m.exps()) {
                        *slot = (*slot).min(*e);
                    }
                }
            }
        }
        mins.unwrap_or_else(|| vec![0; self.n])
    }

    fn leading(&self) -> (&Monomial, &BigInt) {
        self.terms.iter().next_back().expect("nonzero polynomial")
    }

    /// Exact division. `Ok(Some(q))` with `self = q * divisor`, `Ok(None)`
    /// when no Laurent polynomial quotient exists, and an error only for a
    /// zero divisor.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>, Error> {
        self.check_rank(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero(self.n)));
        }
        // Shift both operands so all exponents are non-negative and each
        // variable's minimum exponent is zero. Dividing the shifted operands
        // is equivalent: lowest-degree parts multiply without cancellation,
        // so a Laurent quotient exists exactly when the polynomial quotient
        // does.
        let shift_self = Monomial::of(self.min_exponents().iter().map(|e| -e).collect());
        let shift_div = Monomial::of(divisor.min_exponents().iter().map(|e| -e).collect());
        let mut rem = self.times_term(&shift_self, &BigInt::one());
        let div = divisor.times_term(&shift_div, &BigInt::one());
        let (div_lm, div_lc) = {
            let (m, c) = div.leading();
            (m.clone(), c.clone())
        };
        let mut quotient: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading();
            if !div_lm.divides(rm) {
                return Ok(None);
            }
            let (q, r) = rc.div_rem(&div_lc);
            if !r.is_zero() {
                return Ok(None);
            }
            let qm = rm.div(&div_lm);
            rem = rem.sub(&div.times_term(&qm, &q))?;
            quotient.insert(qm, q);
        }
        // Undo the shifts: self = x^{-shift_self} * rem_input, divisor
        // likewise, so the true quotient picks up x^{shift_div - shift_self}.
        let correction = shift_div.div(&shift_self);
        let q = LaurentPoly { n: self.n, terms: quotient };
        Ok(Some(q.times_term(&correction, &BigInt::one())))
    }

    /// Substitutes `images[i]` for variable `i`. The result lives in the rank
    /// of the images. Returns `Ok(None)` when the result is not a Laurent
    /// polynomial, and `ZeroImage` when a variable that appears with a
    /// negative exponent is sent to zero.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<Option<LaurentPoly>, Error> {
        if images.len() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: images.len() });
        }
        let m = images.first().map(|g| g.n()).unwrap_or(0);
        for g in images {
            if g.n() != m {
                return Err(Error::SizeMismatch { left: m, right: g.n() });
            }
        }
        if self.is_zero() {
            return Ok(Some(LaurentPoly::zero(m)));
        }
        // Clear denominators: with alpha[i] the deepest negative exponent of
        // variable i, self * x^alpha is a genuine polynomial, so
        // self(images) = poly(images) / prod images[i]^alpha[i].
        let mins = self.min_exponents();
        let alpha: Vec<i64> = mins.iter().map(|e| (-e).max(0)).collect();
        for (i, a) in alpha.iter().enumerate() {
            if *a > 0 && images[i].is_zero() {
                return Err(Error::ZeroImage);
            }
        }
        // Cache image powers up to the largest exponent each variable needs.
        let mut max_exp = vec![0u32; self.n];
        for mono in self.terms.keys() {
            for (i, e) in mono.exps().iter().enumerate() {
                let shifted = u32::try_from(e + alpha[i]).expect("shifted exponents are non-negative");
                max_exp[i] = max_exp[i].max(shifted);
            }
        }
        let powers: Vec<Vec<LaurentPoly>> = images
            .iter()
            .zip(&max_exp)
            .map(|(g, &top)| {
                let mut ps = Vec::with_capacity(top as usize + 1);
                ps.push(LaurentPoly::one(m));
                for _ in 0..top {
                    ps.push(ps.last().unwrap().mul(g).expect("matching rank"));
                }
                ps
            })
            .collect();
        let mut numerator = LaurentPoly::zero(m);
        for (mono, c) in &self.terms {
            let mut term = LaurentPoly::constant(m, c.clone());
            for (i, e) in mono.exps().iter().enumerate() {
                let shifted = (e + alpha[i]) as usize;
                if shifted > 0 {
                    term = term.mul(&powers[i][shifted])?;
                }
            }
            numerator = numerator.add(&term)?;
        }
        let mut denominator = LaurentPoly::one(m);
        for (i, a) in alpha.iter().enumerate() {
            if *a > 0 {
                denominator = denominator.mul(&images[i].pow(*a as u32))?;
            }
        }
        numerator.exact_div(&denominator)
    }

    /// Relabels variables: `x_i` becomes `x_{sigma(i)}`. A ring isomorphism.
    pub fn permute_vars(&self, sigma: &Permutation) -> Result<Self, Error> {
        if sigma.n() != self.n {
            return Err(Error::SizeMismatch { left: sigma.n(), right: self.n });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0i64; self.n];
                for (i, e) in m.exps().iter().enumerate() {
                    exps[sigma.apply(i)] = *e;
                }
                (Monomial::of(exps), c.clone())
            })
            .collect();
        Ok(LaurentPoly { n: self.n, terms })
    }

    /// Writes `self = numerator / x^alpha` with the numerator touching
    /// exponent zero in every variable. For the zero polynomial, `alpha` is
    /// all zeros.
    pub fn normal_form(&self) -> NormalForm {
        let mins = self.min_exponents();
        let alpha: Vec<i64> = mins.iter().map(|e| -e).collect();
        let shift = Monomial::of(alpha.clone());
        NormalForm { numerator: self.times_term(&shift, &BigInt::one()), alpha }
    }

    fn check_rank(&self, other: &Self) -> Result<(), Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Renders with the given variable names instead of `x1..xn`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayWith { poly: self, names: Some(names) }
    }
}

struct DisplayWith<'a> {
    poly: &'a LaurentPoly,
    names: Option<&'a [String]>,
}

impl DisplayWith<'_> {
    fn name(&self, i: usize) -> String {
        match self.names {
            Some(names) => names[i].clone(),
            None => format!("x{}", i + 1),
        }
    }
}

impl fmt::Display for DisplayWith<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = self.poly;
        if poly.is_zero() {
            return f.write_str("0");
        }
        // Pull genuine denominators out front so every printed exponent is
        // non-negative: f = numerator / (x_i^a ...).
        let mins = poly.min_exponents();
        let alpha: Vec<i64> = mins.iter().map(|e| (-e).max(0)).collect();
        let shift = Monomial::of(alpha.clone());
        let numerator = poly.times_term(&shift, &BigInt::one());
        let mut first = true;
        for (m, c) in &numerator.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let vars: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, e)| **e != 0)
                .map(|(i, e)| {
                    if *e == 1 {
                        self.name(i)
                    } else {
                        format!("{}^{}", self.name(i), e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        if alpha.iter().any(|a| *a > 0) {
            let denom: Vec<String> = alpha
                .iter()
                .enumerate()
                .filter(|(_, a)| **a > 0)
                .map(|(i, a)| {
                    if *a == 1 {
                        self.name(i)
                    } else {
                        format!("{}^{}", self.name(i), a)
                    }
                })
                .collect();
            write!(f, " / ({})", denom.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&DisplayWith { poly: self, names: None }, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_i64_terms(n, terms).unwrap()
    }

    #[test]
    fn display_orders_terms_by_degree_then_reverse_lex() {
        let f = p(2, &[(&[0, 1], 1), (&[0, 0], 1), (&[1, 0], 1)]);
        assert_eq!(f.to_string(), "1 + x1 + x2");
    }

    #[test]
    fn display_pulls_denominators_out_front() {
        let f = p(2, &[(&[-1, -1], 1), (&[0, -1], 1), (&[-1, 0], 1)]);
        assert_eq!(f.to_string(), "1 + x1 + x2 / (x1*x2)");
    }

    #[test]
    fn display_handles_coefficients_and_powers() {
        let f = p(2, &[(&[2, 0], 3), (&[0, 1], -1), (&[0, 0], -5)]);
        assert_eq!(f.to_string(), "-5 - x2 + 3*x1^2");
    }

    #[test]
    fn from_terms_merges_and_cancels() {
        let f = p(1, &[(&[2], 1), (&[2], -1), (&[0], 4)]);
        assert_eq!(f, p(1, &[(&[0], 4)]));
        assert!(p(1, &[(&[3], 5), (&[3], -5)]).is_zero());
    }

    #[test]
    fn exact_division_recovers_a_known_factor() {
        // (1 + x1) * (1 + x2) = 1 + x1 + x2 + x1 x2
        let a = p(2, &[(&[0, 0], 1), (&[1, 0], 1)]);
        let b = p(2, &[(&[0, 0], 1), (&[0, 1], 1)]);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.exact_div(&b).unwrap(), Some(a.clone()));
        assert_eq!(prod.exact_div(&a).unwrap(), Some(b));
    }

    #[test]
    fn division_by_a_non_factor_reports_none() {
        let f = p(2, &[(&[0, 0], 1), (&[1, 0], 1)]); // 1 + x1
        let g = p(2, &[(&[0, 1], 1), (&[0, 0], 1)]); // 1 + x2
        assert_eq!(f.exact_div(&g).unwrap(), None);
        // Coefficient obstruction: (2 + 2 x1) / 2 works, but /3 does not.
        let h = p(2, &[(&[0, 0], 2), (&[1, 0], 2)]);
        assert_eq!(h.exact_div(&p(2, &[(&[0, 0], 2)])).unwrap(), Some(f));
        assert_eq!(h.exact_div(&p(2, &[(&[0, 0], 3)])).unwrap(), None);
    }

    #[test]
    fn division_handles_negative_exponents() {
        // (x1^-1 + x2) / x1^-1 = 1 + x1 x2
        let f = p(2, &[(&[-1, 0], 1), (&[0, 1], 1)]);
        let g = p(2, &[(&[-1, 0], 1)]);
        assert_eq!(
            f.exact_div(&g).unwrap(),
            Some(p(2, &[(&[0, 0], 1), (&[1, 1], 1)]))
        );
    }

    #[test]
    fn dividing_by_zero_is_an_error() {
        let f = p(1, &[(&[0], 1)]);
        assert!(matches!(f.exact_div(&LaurentPoly::zero(1)), Err(Error::DivisionByZero)));
    }

    #[test]
    fn substitution_into_the_identity_is_the_identity() {
        let f = p(2, &[(&[-2, 1], 3), (&[1, -1], 1), (&[0, 0], -7)]);
        let images = vec![
            LaurentPoly::variable(2, 0).unwrap(),
            LaurentPoly::variable(2, 1).unwrap(),
        ];
        assert_eq!(f.substitute(&images).unwrap(), Some(f));
    }

    #[test]
    fn substitution_clears_denominators_exactly() {
        // f = (1 + x2) / x1 at x1 -> (1 + x2)/x1 (a Laurent image), x2 -> x2:
        // result is x1, a clean round-trip through a nontrivial denominator.
        let f = p(2, &[(&[-1, 0], 1), (&[-1, 1], 1)]);
        let images = vec![f.clone(), LaurentPoly::variable(2, 1).unwrap()];
        assert_eq!(
            f.substitute(&images).unwrap(),
            Some(LaurentPoly::variable(2, 0).unwrap())
        );
    }

    #[test]
    fn substitution_detects_non_laurent_results() {
        // x1^-1 with x1 -> 1 + x2 is 1/(1+x2), not Laurent.
        let f = p(2, &[(&[-1, 0], 1)]);
        let images = vec![p(2, &[(&[0, 0], 1), (&[0, 1], 1)]), LaurentPoly::variable(2, 1).unwrap()];
        assert_eq!(f.substitute(&images).unwrap(), None);
    }

    #[test]
    fn substituting_zero_into_a_denominator_is_an_error() {
        let f = p(1, &[(&[-1], 1)]);
        assert!(matches!(
            f.substitute(&[LaurentPoly::zero(1)]),
            Err(Error::ZeroImage)
        ));
        // A zero image in a purely positive position is fine.
        let g = p(1, &[(&[2], 1), (&[0], 5)]);
        assert_eq!(
            g.substitute(&[LaurentPoly::zero(1)]).unwrap(),
            Some(LaurentPoly::constant(1, BigInt::from(5)))
        );
    }

    #[test]
    fn variable_relabeling_moves_exponents() {
        let sigma = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let f = p(3, &[(&[1, 2, -3], 5)]);
        assert_eq!(f.permute_vars(&sigma).unwrap(), p(3, &[(&[-3, 1, 2], 5)]));
    }

    #[test]
    fn normal_form_splits_off_the_monomial_denominator() {
        let f = p(2, &[(&[-1, 0], 1), (&[-1, 1], 1)]); // (1 + x2)/x1
        let nf = f.normal_form();
        assert_eq!(nf.alpha, vec![1, 0]);
        assert_eq!(nf.numerator, p(2, &[(&[0, 0], 1), (&[0, 1], 1)]));
        // A pure polynomial divisible by x1 gets a negative alpha.
        let g = p(2, &[(&[1, 0], 1), (&[1, 1], 1)]);
        assert_eq!(g.normal_form().alpha, vec![-1, 0]);
    }

    #[test]
    fn positivity_looks_at_every_coefficient() {
        assert!(p(1, &[(&[0], 1), (&[-2], 3)]).has_positive_coefficients());
        assert!(!p(1, &[(&[0], 1), (&[1], -1)]).has_positive_coefficients());
        assert!(!LaurentPoly::zero(1).has_positive_coefficients());
    }

    prop_compose! {
        fn arb_poly()(raw in proptest::collection::vec(
            (proptest::collection::vec(-3i64..=3, 2), -5i64..=5),
            0..6,
        )) -> LaurentPoly {
            LaurentPoly::from_terms(2, raw.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
        }
    }

    proptest! {
        #[test]
        fn addition_is_commutative_and_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(
                a.add(&b).unwrap().add(&c).unwrap(),
                a.add(&b.add(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn multiplication_is_commutative_and_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn multiplication_distributes_over_addition(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn multiply_then_divide_round_trips(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b).unwrap();
            prop_assert_eq!(prod.exact_div(&b).unwrap(), Some(a));
        }

        #[test]
        fn subtraction_inverts_addition(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(a.add(&b).unwrap().sub(&b).unwrap(), a);
        }
    }
}
