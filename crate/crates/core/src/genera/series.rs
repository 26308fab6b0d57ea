use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Exponents, Poly};
use crate::rational::{factorial, format_rational, int, Rational};

/// Largest supported truncation order.
pub const MAX_ORDER: u32 = 30;

/// Coefficients `c₀, c₁, …, c_N` of a power series in one variable.
pub type Coefficients = Vec<Rational>;

fn check_order(order: u32) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::BoundExceeded(format!(
            "series order {order} exceeds {MAX_ORDER}"
        )));
    }
    Ok(())
}

fn inv_factorial(k: u32) -> Rational {
    Rational::new(1.into(), factorial(k))
}

pub fn exp_coeffs(order: u32) -> Coefficients {
    (0..=order).map(inv_factorial).collect()
}

pub fn sinh_coeffs(order: u32) -> Coefficients {
    (0..=order)
        .map(|k| if k % 2 == 1 { inv_factorial(k) } else { Rational::zero() })
        .collect()
}

pub fn cosh_coeffs(order: u32) -> Coefficients {
    (0..=order)
        .map(|k| if k % 2 == 0 { inv_factorial(k) } else { Rational::zero() })
        .collect()
}

pub fn sin_coeffs(order: u32) -> Coefficients {
    (0..=order)
        .map(|k| match k % 4 {
            1 => inv_factorial(k),
            3 => -inv_factorial(k),
            _ => Rational::zero(),
        })
        .collect()
}

pub fn cos_coeffs(order: u32) -> Coefficients {
    (0..=order)
        .map(|k| match k % 4 {
            0 => inv_factorial(k),
            2 => -inv_factorial(k),
            _ => Rational::zero(),
        })
        .collect()
}

/// `f(t)/t` for `f` with zero constant term, keeping `order + 1` coefficients.
fn divide_by_t(f: &Coefficients, order: u32) -> Coefficients {
    (1..=order as usize + 1)
        .map(|k| f.get(k).cloned().unwrap_or_else(Rational::zero))
        .collect()
}

pub fn mul_coeffs(f: &Coefficients, g: &Coefficients, order: u32) -> Coefficients {
    let mut out = vec![Rational::zero(); order as usize + 1];
    for (i, a) in f.iter().enumerate().take(order as usize + 1) {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate().take(order as usize + 1 - i) {
            out[i + j] += a * b;
        }
    }
    out
}

/// Multiplicative inverse; the constant term must be nonzero.
pub fn inverse_coeffs(f: &Coefficients, order: u32) -> Coefficients {
    let c0 = f[0].clone();
    assert!(!c0.is_zero(), "series is not invertible");
    let mut out = vec![Rational::zero(); order as usize + 1];
    out[0] = Rational::one() / &c0;
    for k in 1..=order as usize {
        let mut acc = Rational::zero();
        for j in 1..=k {
            if let Some(a) = f.get(j) {
                acc += a * &out[k - j];
            }
        }
        out[k] = -acc / &c0;
    }
    out
}

/// `f(c·t)`.
pub fn rescale_coeffs(f: &Coefficients, c: &Rational) -> Coefficients {
    let mut p = Rational::one();
    f.iter()
        .map(|a| {
            let v = a * &p;
            p *= c;
            v
        })
        .collect()
}

/// `log f` for `f(0) = 1`.
pub fn log_coeffs(f: &Coefficients, order: u32) -> Coefficients {
    assert!(f[0].is_one(), "log needs constant term 1");
    // (log f)' = f'/f
    let deriv: Coefficients = (1..=order as usize)
        .map(|k| f.get(k).cloned().unwrap_or_else(Rational::zero) * int(k as i64))
        .collect();
    let quotient = mul_coeffs(&deriv, &inverse_coeffs(f, order), order.saturating_sub(1));
    let mut out = vec![Rational::zero(); order as usize + 1];
    for (k, c) in quotient.into_iter().enumerate() {
        out[k + 1] = c / int(k as i64 + 1);
    }
    out
}

/// Coefficients of a named single-variable characteristic series.
///
/// `Ahat = (t/2)/sinh(t/2)`, `Bhat = cosh(t/2)·sinh(t)/t`, `Chat = cos(t/2)·sin(t)/t`,
/// `L = t/tanh(t)`.
pub fn named_coeffs(name: &str, order: u32) -> Result<Coefficients> {
    check_order(order)?;
    let half = Rational::new(1.into(), 2.into());
    let sinh_over_t = divide_by_t(&sinh_coeffs(order + 1), order);
    let sin_over_t = divide_by_t(&sin_coeffs(order + 1), order);
    Ok(match name {
        "exp" => exp_coeffs(order),
        "sinh" => sinh_coeffs(order),
        "cosh" => cosh_coeffs(order),
        "sin" => sin_coeffs(order),
        "cos" => cos_coeffs(order),
        "Ahat" => inverse_coeffs(&rescale_coeffs(&sinh_over_t, &half), order),
        "Bhat" => mul_coeffs(&rescale_coeffs(&cosh_coeffs(order), &half), &sinh_over_t, order),
        "Chat" => mul_coeffs(&rescale_coeffs(&cos_coeffs(order), &half), &sin_over_t, order),
        "L" => mul_coeffs(&cosh_coeffs(order), &inverse_coeffs(&sinh_over_t, order), order),
        other => return Err(Error::UnknownSeries(other.to_string())),
    })
}

/// A multivariate power series truncated at total degree `order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: Vec<String>,
    order: u32,
    poly: Poly,
}

impl TruncatedSeries {
    pub fn new(vars: Vec<String>, order: u32, poly: Poly) -> Result<Self> {
        check_order(order)?;
        if poly.nvars() != vars.len() {
            return Err(Error::InvalidArgument("variable count mismatch".into()));
        }
        Ok(TruncatedSeries {
            poly: poly.truncate(order),
            vars,
            order,
        })
    }

    pub fn one(vars: Vec<String>, order: u32) -> Result<Self> {
        let n = vars.len();
        Self::new(vars, order, Poly::one(n))
    }

    /// `f(Σ cᵢ xᵢ)` for a single-variable series `f`.
    pub fn compose_linear(vars: Vec<String>, order: u32, f: &Coefficients, linear: &[Rational]) -> Result<Self> {
        check_order(order)?;
        let n = vars.len();
        let mut lin = Poly::zero(n);
        for (i, c) in linear.iter().enumerate() {
            lin += &Poly::monomial(n, i, 1, c.clone());
        }
        let mut out = Poly::zero(n);
        let mut power = Poly::one(n);
        for k in 0..=order as usize {
            if let Some(c) = f.get(k) {
                if !c.is_zero() {
                    out += &power.scale(c);
                }
            }
            power = (&power * &lin).truncate(order);
        }
        Self::new(vars, order, out)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.poly.coeff(e)
    }

    fn compatible(&self, other: &Self) -> Result<u32> {
        if self.vars != other.vars {
            return Err(Error::InvalidArgument("series variables differ".into()));
        }
        Ok(self.order.min(other.order))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let order = self.compatible(other)?;
        let mut out = Poly::zero(self.vars.len());
        for (e1, c1) in self.poly.terms() {
            let d1: u32 = e1.iter().sum();
            for (e2, c2) in other.poly.terms() {
                let d2: u32 = e2.iter().sum();
                if d1 + d2 > order {
                    continue;
                }
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Self::new(self.vars.clone(), order, out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let order = self.compatible(other)?;
        Self::new(self.vars.clone(), order, &self.poly + &other.poly)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            poly: self.poly.scale(c),
            ..self.clone()
        }
    }

    pub fn homogeneous_part(&self, degree: u32) -> Poly {
        self.poly.homogeneous_part(degree)
    }

    /// Golden-file form: one `exponent-vector : p/q` line per term, sorted lexicographically.
    pub fn to_golden(&self) -> String {
        let mut lines: Vec<(Vec<u32>, String)> = self
            .poly
            .terms()
            .map(|(e, c)| (e.to_vec(), format_rational(c)))
            .collect();
        lines.sort();
        lines
            .into_iter()
            .map(|(e, c)| {
                let parts: Vec<String> = e.iter().map(u32::to_string).collect();
                format!("[{}] : {c}", parts.join(","))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.display_with(&self.vars))
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O({})", self.order + 1)
    }
}

/// A named characteristic series in the given variables.
///
/// `BChat` takes two variables `(s, r)` and is `Bhat(s)·Chat(r)`; every other name takes one.
pub fn series(name: &str, vars: &[&str], order: u32) -> Result<TruncatedSeries> {
    let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    if name == "BChat" {
        if vars.len() != 2 {
            return Err(Error::InvalidArgument("BChat takes two variables".into()));
        }
        let b = TruncatedSeries::compose_linear(
            names.clone(),
            order,
            &named_coeffs("Bhat", order)?,
            &[Rational::one(), Rational::zero()],
        )?;
        let c = TruncatedSeries::compose_linear(
            names,
            order,
            &named_coeffs("Chat", order)?,
            &[Rational::zero(), Rational::one()],
        )?;
        return b.mul(&c);
    }
    let coeffs = named_coeffs(name, order)?;
    if vars.len() != 1 {
        return Err(Error::InvalidArgument(format!("{name} takes one variable")));
    }
    TruncatedSeries::compose_linear(names, order, &coeffs, &[Rational::one()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn named_examples() {
        assert_eq!(
            series("Ahat", &["t"], 4).unwrap().to_string(),
            "1 - 1/24 t^2 + 7/5760 t^4"
        );
        assert_eq!(series("L", &["t"], 4).unwrap().to_string(), "1 + 1/3 t^2 - 1/45 t^4");
        assert_eq!(series("exp", &["t"], 3).unwrap().coeff(&[0]), int(1));
        assert_eq!(series("exp", &["t"], 3).unwrap().coeff(&[3]), rat(1, 6));
        assert!(matches!(series("Zeta", &["t"], 3), Err(Error::UnknownSeries(_))));
        assert!(series("exp", &["t"], 31).is_err());
    }

    #[test]
    fn trig_and_hyperbolic() {
        let o = 8;
        let sin = named_coeffs("sin", o).unwrap();
        let cos = named_coeffs("cos", o).unwrap();
        // sin² + cos² = 1
        let s2 = mul_coeffs(&sin, &sin, o);
        let c2 = mul_coeffs(&cos, &cos, o);
        let sum: Coefficients = s2.iter().zip(&c2).map(|(a, b)| a + b).collect();
        let mut one = vec![Rational::zero(); o as usize + 1];
        one[0] = Rational::one();
        assert_eq!(sum, one);
        let sinh = named_coeffs("sinh", o).unwrap();
        let cosh = named_coeffs("cosh", o).unwrap();
        let exp = named_coeffs("exp", o).unwrap();
        let total: Coefficients = sinh.iter().zip(&cosh).map(|(a, b)| a + b).collect();
        assert_eq!(total, exp);
    }

    #[test]
    fn log_of_exp() {
        let o = 10;
        let lg = log_coeffs(&exp_coeffs(o), o);
        let mut expect = vec![Rational::zero(); o as usize + 1];
        expect[1] = Rational::one();
        assert_eq!(lg, expect);
    }

    #[test]
    fn bchat_is_product() {
        let s = series("BChat", &["s", "r"], 4).unwrap();
        assert_eq!(s.coeff(&[2, 0]), named_coeffs("Bhat", 4).unwrap()[2]);
        assert_eq!(s.coeff(&[0, 2]), named_coeffs("Chat", 4).unwrap()[2]);
        assert_eq!(
            s.coeff(&[2, 2]),
            &named_coeffs("Bhat", 4).unwrap()[2] * &named_coeffs("Chat", 4).unwrap()[2]
        );
    }
}
