use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::SymError;
use crate::rational::Rational;
use crate::ring::Ring;

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then lexicographic in the ring's declared variable order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    fn with_exponent(&self, var: usize, e: u32) -> Monomial {
        let mut v = self.0.clone();
        v[var] = e;
        Monomial(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered ascending by graded-lex, so the leading
/// term is the last entry and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: impl Into<Rational>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.len()), c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn variable(ring: &Ring, idx: usize) -> Self {
        let mut exps = vec![0; ring.len()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), Rational::one());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Ring, coeff: Rational, mono: Monomial) -> Self {
        assert_eq!(
            mono.0.len(),
            ring.len(),
            "exponent vector length differs from ring size"
        );
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            assert_eq!(
                m.0.len(),
                ring.len(),
                "exponent vector length differs from ring size"
            );
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.ring.len()))
    }

    /// Leading (largest graded-lex) term, if any.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Degree in one variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn degree_in_name(&self, name: &str) -> Result<Option<u32>, SymError> {
        Ok(self.degree_in(self.ring.index_of(name)?))
    }

    /// Total degree restricted to the given variables.
    pub fn partial_degree(&self, vars: &[usize]) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| vars.iter().map(|&v| m.0[v]).sum())
            .max()
    }

    /// Indices of variables that actually occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.ring.len())
            .filter(|&v| self.terms.keys().any(|m| m.0[v] > 0))
            .collect()
    }

    fn add_term(&mut self, mono: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, mono: Monomial, c: &Rational) {
        self.add_term(mono, &-c);
    }

    pub fn try_add(&self, rhs: &Polynomial) -> Result<Polynomial, SymError> {
        self.ring.check_same(&rhs.ring)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Polynomial) -> Result<Polynomial, SymError> {
        self.ring.check_same(&rhs.ring)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.sub_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Polynomial) -> Result<Polynomial, SymError> {
        self.ring.check_same(&rhs.ring)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.mul(mono), v * c))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn diff(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                out.add_term(m.with_exponent(var, e - 1), &(c * Rational::from(e)));
            }
        }
        out
    }

    pub fn diff_name(&self, name: &str) -> Result<Polynomial, SymError> {
        Ok(self.diff(self.ring.index_of(name)?))
    }

    /// Exact value under an assignment covering every variable that occurs.
    pub fn evaluate(&self, assignment: &HashMap<String, Rational>) -> Result<Rational, SymError> {
        let mut values = Vec::with_capacity(self.ring.len());
        for (i, name) in self.ring.names().iter().enumerate() {
            let occurs = self.terms.keys().any(|m| m.0[i] > 0);
            match assignment.get(name) {
                Some(v) => values.push(v.clone()),
                None if occurs => return Err(SymError::MissingAssignment(name.clone())),
                None => values.push(Rational::zero()),
            }
        }
        Ok(self.evaluate_slice(&values))
    }

    /// Evaluate with one value per ring variable, in ring order.
    pub fn evaluate_slice(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.ring.len());
        let mut cache: Vec<Vec<Rational>> = vec![vec![Rational::one()]; values.len()];
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let powers = &mut cache[v];
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap() * &values[v];
                    powers.push(next);
                }
                t *= &powers[e as usize];
            }
            total += &t;
        }
        total
    }

    /// Substitute constants for some variables; the result stays in the same ring.
    pub fn partial_evaluate(&self, assignment: &[(usize, Rational)]) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = m.clone();
            for (v, val) in assignment {
                let e = mono.0[*v];
                if e > 0 {
                    coeff *= &val.pow(e);
                    mono.0[*v] = 0;
                }
            }
            out.add_term(mono, &coeff);
        }
        out
    }

    /// Replace variable `var` by the polynomial `value`.
    pub fn substitute(&self, var: usize, value: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, value.ring, "substitution across rings");
        let coeffs = self.coeffs_in(var);
        // Horner in `var`.
        let mut acc = Polynomial::zero(&self.ring);
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn substitute_name(&self, name: &str, value: &Polynomial) -> Result<Polynomial, SymError> {
        self.ring.check_same(&value.ring)?;
        Ok(self.substitute(self.ring.index_of(name)?, value))
    }

    /// Coefficients in powers of `var`: `self = Σ coeffs[k] · var^k`, each
    /// coefficient free of `var`.
    pub fn coeffs_in(&self, var: usize) -> Vec<Polynomial> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Polynomial::zero(&self.ring); deg + 1];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            out[e].add_term(m.with_exponent(var, 0), c);
        }
        out
    }

    pub fn from_coeffs_in(ring: &Ring, var: usize, coeffs: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero(ring);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let e = m.0[var] + k as u32;
                out.add_term(m.with_exponent(var, e), v);
            }
        }
        out
    }

    /// Re-express in another ring by matching variable names. Fails if a
    /// variable that occurs is missing from the target.
    pub fn to_ring(&self, target: &Ring) -> Result<Polynomial, SymError> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ring.len());
        for (i, name) in self.ring.names().iter().enumerate() {
            let occurs = self.terms.keys().any(|m| m.0[i] > 0);
            match target.index_of(name) {
                Ok(j) => map.push(Some(j)),
                Err(e) if occurs => return Err(e),
                Err(_) => map.push(None),
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.len()];
            for (i, &e) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    exps[j] = e;
                }
            }
            out.add_term(Monomial(exps), c);
        }
        Ok(out)
    }

    /// Exact quotient `self / d`; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Result<Polynomial, SymError> {
        self.ring.check_same(&d.ring)?;
        let (dm, dc) = match d.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(SymError::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while let Some((m, c)) = rem.leading_term() {
            if !dm.divides(m) {
                return Err(SymError::InexactDivision);
            }
            let qm = dm.quotient_of(m);
            let qc = c / &dc;
            for (tm, tc) in &d.terms {
                rem.sub_term(tm.mul(&qm), &(tc * &qc));
            }
            quot.terms.insert(qm, qc);
        }
        Ok(quot)
    }

    /// Whether `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &Polynomial) -> bool {
        !d.is_zero() && self.div_exact(d).is_ok()
    }

    /// `(unit, primitive)` with `self = unit · primitive`, where the
    /// primitive part has integer coefficients of content 1 and a positive
    /// leading coefficient. The zero polynomial maps to `(0, 0)`.
    pub fn unit_and_primitive(&self) -> (Rational, Polynomial) {
        if self.is_zero() {
            return (Rational::zero(), self.clone());
        }
        let (num_gcd, den_lcm) = Rational::content_parts(self.terms.values());
        let mut unit = Rational::new(num_gcd, den_lcm).expect("nonzero lcm");
        if self.leading_coeff().is_negative() {
            unit = -unit;
        }
        let inv = unit.recip().expect("nonzero unit");
        (unit, self.scale(&inv))
    }

    pub fn primitive(&self) -> Polynomial {
        self.unit_and_primitive().1
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.recip().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// Some nonzero `q` with `self = q · other`, if one exists.
    pub fn ratio_to(&self, other: &Polynomial) -> Option<Rational> {
        if self.ring != other.ring || self.len() != other.len() || self.is_zero() {
            return None;
        }
        let (lm, lc) = self.leading_term()?;
        let oc = other.terms.get(lm)?;
        let q = lc / oc;
        let same = self
            .terms
            .iter()
            .all(|(m, c)| other.terms.get(m).is_some_and(|o| &(o * &q) == c));
        same.then_some(q)
    }

    /// Integer coefficients, when every coefficient is an integer.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.terms
            .values()
            .map(|c| c.is_integer().then(|| c.numer().clone()))
            .collect()
    }

    pub fn max_coeff_bits(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    /// Every monomial's exponent in `var` has the same parity.
    pub fn has_constant_parity_in(&self, var: usize) -> bool {
        let mut parity = None;
        for m in self.terms.keys() {
            let p = m.0[var] % 2;
            match parity {
                None => parity = Some(p),
                Some(q) if q != p => return false,
                _ => {}
            }
        }
        true
    }

    /// Storage invariant: no stored zero coefficient, exponent vectors sized to the ring.
    pub fn is_well_formed(&self) -> bool {
        self.terms
            .iter()
            .all(|(m, c)| !c.is_zero() && m.0.len() == self.ring.len())
    }
}

/// Apply one of the three ring operations with an explicit ring check.
pub fn poly_arith(
    lhs: &Polynomial,
    rhs: &Polynomial,
    kind: ArithKind,
) -> Result<Polynomial, SymError> {
    match kind {
        ArithKind::Add => lhs.try_add(rhs),
        ArithKind::Sub => lhs.try_sub(rhs),
        ArithKind::Mul => lhs.try_mul(rhs),
    }
}

// Operator forms panic on a ring mismatch; use `try_*` or `poly_arith` when
// the rings are not known to agree.
macro_rules! poly_binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, try_add);
poly_binop!(Sub, sub, try_sub);
poly_binop!(Mul, mul, try_mul);

impl Mul<&Rational> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Rational) -> Polynomial {
        self.scale(rhs)
    }
}

impl Mul<Rational> for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Rational) -> Polynomial {
        self.scale(&rhs)
    }
}

impl Mul<Rational> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Rational) -> Polynomial {
        self.scale(&rhs)
    }
}

impl Mul<&Polynomial> for Rational {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        rhs.scale(&self)
    }
}

impl Mul<Polynomial> for Rational {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        rhs.scale(&self)
    }
}

impl Mul<&Polynomial> for &Rational {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        rhs.scale(self)
    }
}

impl Mul<Polynomial> for &Rational {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        rhs.scale(self)
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ring.names().hash(state);
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}
