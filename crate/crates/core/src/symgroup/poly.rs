use std::fmt;
use std::ops::{Add, Mul};

use crate::exactalg::GaussianRational;

/// A polynomial in one variable `d`; `coefficients[j]` multiplies `d^j`.
/// Trailing zeros are always trimmed, so equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolynomialInD {
    coefficients: Vec<GaussianRational>,
}

impl PolynomialInD {
    pub fn new(mut coefficients: Vec<GaussianRational>) -> Self {
        while coefficients.last().is_some_and(GaussianRational::is_zero) {
            coefficients.pop();
        }
        PolynomialInD { coefficients }
    }

    pub fn from_ints(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// `c·d^j`.
    pub fn monomial(c: GaussianRational, j: usize) -> Self {
        let mut coefficients = vec![GaussianRational::zero(); j + 1];
        coefficients[j] = c;
        Self::new(coefficients)
    }

    /// `d + a`.
    pub fn linear(a: GaussianRational) -> Self {
        Self::new(vec![a, GaussianRational::one()])
    }

    pub fn coefficients(&self) -> &[GaussianRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, j: usize) -> GaussianRational {
        self.coefficients.get(j).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, d: &GaussianRational) -> GaussianRational {
        self.coefficients
            .iter()
            .rev()
            .fold(GaussianRational::zero(), |acc, c| &(&acc * d) + c)
    }
}

impl Add for &PolynomialInD {
    type Output = PolynomialInD;
    fn add(self, rhs: &PolynomialInD) -> PolynomialInD {
        let len = self.coefficients.len().max(rhs.coefficients.len());
        PolynomialInD::new((0..len).map(|j| &self.coefficient(j) + &rhs.coefficient(j)).collect())
    }
}

impl Mul for &PolynomialInD {
    type Output = PolynomialInD;
    fn mul(self, rhs: &PolynomialInD) -> PolynomialInD {
        if self.is_zero() || rhs.is_zero() {
            return PolynomialInD::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        PolynomialInD::new(out)
    }
}

impl fmt::Debug for PolynomialInD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Highest power first, e.g. `2*d^3-6*d^2+4*d`. Non-real coefficients are
/// parenthesized.
impl fmt::Display for PolynomialInD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = if c.is_real() { c.to_string() } else { format!("({c})") };
            let (sign, magnitude) = match text.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", text),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{sign}")?;
            }
            first = false;
            let var = match j {
                0 => String::new(),
                1 => "d".to_string(),
                _ => format!("d^{j}"),
            };
            match (magnitude.as_str(), j) {
                (m, 0) => write!(f, "{m}")?,
                ("1", _) => write!(f, "{var}")?,
                (m, _) => write!(f, "{m}*{var}")?,
            }
        }
        Ok(())
    }
}
