use super::series::{nilpotent_sin_cos, nilpotent_sinh_cosh};
use super::{Field, Rational, Real, Ring};
use std::collections::HashMap;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

/// Monomial bookkeeping for Taylor expansions in `nvars` variables truncated
/// at total degree `order`.
#[derive(Debug)]
struct Layout {
    nvars: usize,
    order: usize,
    monomials: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    /// `product[i][j]` = index of monomial i·j, if within the truncation.
    product: Vec<Vec<Option<usize>>>,
}

impl Layout {
    fn get(nvars: usize, order: usize) -> Arc<Layout> {
        type Cache = Mutex<HashMap<(usize, usize), Arc<Layout>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
        guard
            .entry((nvars, order))
            .or_insert_with(|| Arc::new(Layout::build(nvars, order)))
            .clone()
    }

    fn build(nvars: usize, order: usize) -> Layout {
        let mut monomials: Vec<Vec<u8>> = vec![vec![0; nvars]];
        let mut frontier = monomials.clone();
        for _ in 0..order {
            let mut next = Vec::new();
            for m in &frontier {
                // Only raise variables at or after the last nonzero slot so
                // each monomial is generated once.
                let start = m.iter().rposition(|&e| e > 0).unwrap_or(0);
                for v in start..nvars {
                    let mut n = m.clone();
                    n[v] += 1;
                    next.push(n);
                }
            }
            monomials.extend(next.iter().cloned());
            frontier = next;
        }
        let index: HashMap<Vec<u8>, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let product = monomials
            .iter()
            .map(|a| {
                monomials
                    .iter()
                    .map(|b| {
                        let s: Vec<u8> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        index.get(&s).copied()
                    })
                    .collect()
            })
            .collect();
        Layout {
            nvars,
            order,
            monomials,
            index,
            product,
        }
    }
}

/// Truncated multivariate Taylor expansion with `f64` coefficients.
///
/// Used to differentiate through nested Poisson brackets: the expansion of a
/// bracket to order N needs the expansions of its arguments to order N+1,
/// and a single runtime-sized type keeps that recursion out of the type
/// system.
#[derive(Clone, Debug)]
pub struct MultiJet {
    layout: Option<Arc<Layout>>,
    c: Vec<f64>,
}

impl PartialEq for MultiJet {
    fn eq(&self, other: &Self) -> bool {
        let n = self.c.len().max(other.c.len());
        (0..n).all(|i| self.c.get(i).unwrap_or(&0.0) == other.c.get(i).unwrap_or(&0.0))
    }
}

impl MultiJet {
    pub fn constant(v: f64) -> Self {
        MultiJet {
            layout: None,
            c: vec![v],
        }
    }

    /// `value + d_k` in an expansion over `nvars` displacements.
    pub fn variable(nvars: usize, order: usize, k: usize, value: f64) -> Self {
        let layout = Layout::get(nvars, order);
        let mut c = vec![0.0; layout.monomials.len()];
        c[0] = value;
        if order > 0 {
            let mut e = vec![0u8; nvars];
            e[k] = 1;
            c[layout.index[&e]] = 1.0;
        }
        MultiJet {
            layout: Some(layout),
            c,
        }
    }

    /// Seeds every coordinate of `point` as an expansion variable.
    pub fn seed_point(point: &[f64], order: usize) -> Vec<MultiJet> {
        (0..point.len())
            .map(|k| MultiJet::variable(point.len(), order, k, point[k]))
            .collect()
    }

    pub fn value(&self) -> f64 {
        self.c[0]
    }

    pub fn order(&self) -> Option<usize> {
        self.layout.as_ref().map(|l| l.order)
    }

    /// Coefficient of the monomial with exponent vector `exps`.
    pub fn coefficient(&self, exps: &[u8]) -> f64 {
        match &self.layout {
            None => {
                if exps.iter().all(|&e| e == 0) {
                    self.c[0]
                } else {
                    0.0
                }
            }
            Some(l) => l.index.get(exps).map_or(0.0, |&i| self.c[i]),
        }
    }

    /// ∂/∂d_k, one order lower.
    pub fn derivative(&self, k: usize) -> MultiJet {
        let Some(l) = &self.layout else {
            return MultiJet::constant(0.0);
        };
        if l.order == 0 {
            return MultiJet::constant(0.0);
        }
        let lower = Layout::get(l.nvars, l.order - 1);
        let mut c = vec![0.0; lower.monomials.len()];
        for (i, m) in l.monomials.iter().enumerate() {
            if m[k] == 0 || self.c[i] == 0.0 {
                continue;
            }
            let mut n = m.clone();
            n[k] -= 1;
            if let Some(&j) = lower.index.get(&n) {
                c[j] += self.c[i] * f64::from(m[k]);
            }
        }
        MultiJet {
            layout: Some(lower),
            c,
        }
    }

    fn joint_layout(&self, other: &Self) -> Option<Arc<Layout>> {
        match (&self.layout, &other.layout) {
            (Some(a), Some(b)) => {
                assert!(
                    Arc::ptr_eq(a, b),
                    "MultiJet operands have different variable counts or orders"
                );
                Some(a.clone())
            }
            (a, b) => a.clone().or_else(|| b.clone()),
        }
    }

    fn padded(&self, len: usize) -> Vec<f64> {
        let mut v = self.c.clone();
        v.resize(len, 0.0);
        v
    }

    fn nilpotent_part(&self) -> MultiJet {
        let mut h = self.clone();
        h.c[0] = 0.0;
        h
    }
}

impl Add for MultiJet {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let layout = self.joint_layout(&rhs);
        let len = self.c.len().max(rhs.c.len());
        let (a, b) = (self.padded(len), rhs.padded(len));
        MultiJet {
            layout,
            c: a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for MultiJet {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for MultiJet {
    type Output = Self;
    fn neg(mut self) -> Self {
        self.c.iter_mut().for_each(|x| *x = -*x);
        self
    }
}

impl Mul for MultiJet {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let layout = self.joint_layout(&rhs);
        match &layout {
            None => MultiJet::constant(self.c[0] * rhs.c[0]),
            Some(l) => {
                let n = l.monomials.len();
                let mut c = vec![0.0; n];
                for (i, &a) in self.c.iter().enumerate() {
                    if a == 0.0 {
                        continue;
                    }
                    for (j, &b) in rhs.c.iter().enumerate() {
                        if b == 0.0 {
                            continue;
                        }
                        if let Some(k) = l.product[i][j] {
                            c[k] += a * b;
                        }
                    }
                }
                MultiJet { layout, c }
            }
        }
    }
}

impl Div for MultiJet {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let order = rhs.order().unwrap_or(0);
        let b0 = rhs.c[0];
        // 1/(b0 + h) = (1/b0) Σ (-h/b0)^k
        let step = -(rhs.nilpotent_part() * MultiJet::constant(1.0 / b0));
        let mut term = MultiJet::constant(1.0 / b0);
        let mut inv = term.clone();
        for _ in 0..order {
            term = term * step.clone();
            inv = inv + term.clone();
        }
        self * inv
    }
}

impl Ring for MultiJet {
    fn zero() -> Self {
        MultiJet::constant(0.0)
    }
    fn one() -> Self {
        MultiJet::constant(1.0)
    }
    fn from_rational(q: &Rational) -> Self {
        MultiJet::constant(f64::from_rational(q))
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0.0)
    }
}

impl Field for MultiJet {
    fn lead(&self) -> f64 {
        self.c[0]
    }
}

impl Real for MultiJet {
    fn sin(&self) -> Self {
        let v = self.c[0];
        let (s, co) = nilpotent_sin_cos(&self.nilpotent_part(), self.order().unwrap_or(0));
        MultiJet::constant(v.sin()) * co + MultiJet::constant(v.cos()) * s
    }
    fn cos(&self) -> Self {
        let v = self.c[0];
        let (s, co) = nilpotent_sin_cos(&self.nilpotent_part(), self.order().unwrap_or(0));
        MultiJet::constant(v.cos()) * co - MultiJet::constant(v.sin()) * s
    }
    fn sinh(&self) -> Self {
        let v = self.c[0];
        let (s, co) = nilpotent_sinh_cosh(&self.nilpotent_part(), self.order().unwrap_or(0));
        MultiJet::constant(v.sinh()) * co + MultiJet::constant(v.cosh()) * s
    }
    fn cosh(&self) -> Self {
        let v = self.c[0];
        let (s, co) = nilpotent_sinh_cosh(&self.nilpotent_part(), self.order().unwrap_or(0));
        MultiJet::constant(v.cosh()) * co + MultiJet::constant(v.sinh()) * s
    }
}
