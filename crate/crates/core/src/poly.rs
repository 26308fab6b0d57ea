//! Sparse multivariate polynomials over exact rationals.
//!
//! One type serves as the simplex-variable polynomials of the integration
//! engine, the Cartan-parameter polynomials of the local index computation,
//! and the storage behind truncated power series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::rational::{format_rational, int, Rational};

pub type Exponents = SmallVec<[u32; 8]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Exponents::from_elem(0, nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    /// The polynomial `v_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        Poly::monomial(nvars, var, 1, Rational::one())
    }

    /// `c * v_var^power`.
    pub fn monomial(nvars: usize, var: usize, power: u32, c: Rational) -> Self {
        assert!(var < nvars, "variable {var} out of range for {nvars} variables");
        let mut e = Exponents::from_elem(0, nvars);
        e[var] = power;
        let mut p = Poly::zero(nvars);
        p.add_term(e, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps only terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        self.filter(|e| e.iter().sum::<u32>() == d)
    }

    /// Drops terms of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Poly {
        self.filter(|e| e.iter().sum::<u32>() <= d)
    }

    pub fn filter(&self, keep: impl Fn(&Exponents) -> bool) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] -= 1;
            out.add_term(e2, c * int(i64::from(e[var])));
        }
        out
    }

    pub fn antiderivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[var] += 1;
            let d = int(i64::from(e2[var]));
            out.add_term(e2, c / d);
        }
        out
    }

    /// Replaces `v_var` by `value` (a polynomial in the same variables).
    pub fn substitute(&self, var: usize, value: &Poly) -> Poly {
        assert_eq!(value.nvars, self.nvars);
        let maxdeg = self.degree_in(var);
        let mut powers = vec![Poly::one(self.nvars)];
        for k in 1..=maxdeg as usize {
            let next = &powers[k - 1] * value;
            powers.push(next);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut rest = e.clone();
            rest[var] = 0;
            let base = Poly::from_terms(self.nvars, [(rest, c.clone())]);
            out += &(&base * &powers[k]);
        }
        out
    }

    /// `∫_{lower}^{upper} p dv_var` with polynomial limits.
    pub fn integrate(&self, var: usize, lower: &Poly, upper: &Poly) -> Poly {
        let anti = self.antiderivative(var);
        &anti.substitute(var, upper) - &anti.substitute(var, lower)
    }

    /// Evaluates every variable at the given point.
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, k) in point.iter().zip(e.iter()) {
                for _ in 0..*k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Re-embeds into a ring with `nvars` variables; `map[i]` is the new
    /// index of old variable `i`. Variables that do not occur may map anywhere.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.nvars);
        let mut out = Poly::zero(nvars);
        for (e, c) in &self.terms {
            let mut e2 = Exponents::from_elem(0, nvars);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    e2[map[i]] += k;
                }
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Renders with the given variable names, highest total degree last.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Exponents> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (idx, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let negative = c < &Rational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(i, k)| {
                    if *k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{} {}", format_rational(&mag), mono.join("*")));
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}
