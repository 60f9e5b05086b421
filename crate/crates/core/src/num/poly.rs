use super::{Jet, Rational, Ring};
use num_traits::{One, Signed, Zero};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Product of named variables with positive exponents, kept sorted by name.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(String, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(name.to_string(), exp)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| v == name)
            .map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&str, u32)> {
        self.0.iter().map(|(v, e)| (v.as_str(), *e))
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<String, u32> = self.0.iter().cloned().collect();
        for (v, e) in &other.0 {
            *map.entry(v.clone()).or_insert(0) += e;
        }
        Monomial(map.into_iter().collect())
    }

    fn without(&self, name: &str) -> Monomial {
        Monomial(self.0.iter().filter(|(v, _)| v != name).cloned().collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Multivariate polynomial with exact rational coefficients in named
/// formal parameters (η and ξ throughout the catalog).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn constant(c: Rational) -> Self {
        let mut p = Poly::default();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn integer(n: i64) -> Self {
        Poly::constant(Rational::from_integer(n.into()))
    }

    pub fn var(name: &str) -> Self {
        Poly::monomial(<Rational as One>::one(), Monomial::var(name, 1))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut p = Poly::default();
        p.add_term(m, c);
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if Zero::is_zero(o.get()) {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(
                self.terms
                    .get(&Monomial::one())
                    .cloned()
                    .unwrap_or_else(<Rational as Zero>::zero),
            )
        } else {
            None
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(v, _)| v.to_string()))
            .collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        self.terms.keys().map(|m| m.exponent(name)).max().unwrap_or(0)
    }

    /// Coefficient of `name^k`, as a polynomial in the remaining variables.
    pub fn coefficient_in(&self, name: &str, k: u32) -> Poly {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            if m.exponent(name) == k {
                out.add_term(m.without(name), c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        let mut out = Poly::default();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Replace `name` by `value` everywhere.
    pub fn substitute(&self, name: &str, value: &Poly) -> Poly {
        let mut out = Poly::default();
        for (m, c) in &self.terms {
            let e = m.exponent(name);
            let rest = Poly::monomial(c.clone(), m.without(name));
            out = out + rest * value.powi(e);
        }
        out
    }

    /// Evaluate in any ring, looking variables up by name. Returns the name of
    /// the first unbound variable on failure.
    pub fn eval<R: Ring>(&self, lookup: impl Fn(&str) -> Option<R>) -> Result<R, String> {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut term = R::from_rational(c);
            for (v, e) in m.factors() {
                let value = lookup(v).ok_or_else(|| v.to_string())?;
                term = term * value.powi(e);
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, bindings: &[(&str, f64)]) -> Result<f64, String> {
        self.eval(|v| bindings.iter().find(|(n, _)| *n == v).map(|(_, x)| *x))
    }

    /// Expansion in `name` as a truncated jet; every other variable must be absent.
    pub fn to_jet(&self, name: &str, order: usize) -> Result<Jet<Rational>, String> {
        if let Some(other) = self.variables().into_iter().find(|v| v != name) {
            return Err(other);
        }
        let coeffs = (0..=order)
            .map(|k| {
                self.coefficient_in(name, k as u32)
                    .as_constant()
                    .unwrap_or_else(<Rational as Zero>::zero)
            })
            .collect();
        Ok(Jet::from_coeffs(coeffs, order))
    }

    /// Inverse of [`Poly::to_jet`] for the stored coefficients.
    pub fn from_jet(jet: &Jet<Rational>, name: &str) -> Poly {
        let order = jet.order().unwrap_or(0);
        let mut out = Poly::default();
        for k in 0..=order {
            out.add_term(Monomial::var(name, k as u32), jet.coeff(k));
        }
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        self.terms.values_mut().for_each(|c| *c = -c.clone());
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::integer(1)
    }
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(q.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl From<Rational> for Poly {
    fn from(q: Rational) -> Self {
        Poly::constant(q)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::integer(n)
    }
}

/// Parseable text: `-1/2*eta^2*xi + eta - 3`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(a.0.cmp(b.0)));
        for (i, (m, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
