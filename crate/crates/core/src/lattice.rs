//! Configuration model: validation of the point matrix, the kernel lattice,
//! the lattice index, and binomial rendering.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmat::IntMatrix;

/// A validated integer point configuration: an m x n matrix of full row
/// rank whose rational row span contains the all-ones vector.
#[derive(Clone)]
pub struct Configuration {
    a: IntMatrix,
    labels: Option<Vec<String>>,
    homogeneous: bool,
    spans_zm: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct ValidateOptions {
    /// Accept repeated columns (they create support-2 circuits).
    pub allow_repeats: bool,
    /// When false, a missing all-ones vector in the row span is only a
    /// warning recorded on the configuration.
    pub require_homogeneous: bool,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions {
            allow_repeats: false,
            require_homogeneous: true,
        }
    }
}

impl Configuration {
    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    /// Number of rows of A.
    pub fn m(&self) -> usize {
        self.a.rows()
    }

    /// Number of points (columns of A).
    pub fn n(&self) -> usize {
        self.a.cols()
    }

    /// Dimension d = m - 1.
    pub fn dim(&self) -> usize {
        self.m() - 1
    }

    /// Codimension r = n - m.
    pub fn codim(&self) -> usize {
        self.n() - self.m()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Whether the columns span all of Z^m (warning-level flag; kernel
    /// combinatorics do not depend on it).
    pub fn columns_span_zm(&self) -> bool {
        self.spans_zm
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.n() {
            return Err(Error::Dimension(format!(
                "{} labels for {} columns",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(())
    }
}

pub fn validate(a: IntMatrix) -> Result<Configuration> {
    validate_with(a, &ValidateOptions::default())
}

pub fn validate_with(a: IntMatrix, opts: &ValidateOptions) -> Result<Configuration> {
    let m = a.rows();
    let n = a.cols();
    if m == 0 || n == 0 {
        return Err(Error::InvalidConfiguration("empty matrix".into()));
    }
    let rank = a.rank();
    if rank != m {
        return Err(Error::InvalidConfiguration(format!(
            "rank {rank} is less than the row count {m}"
        )));
    }
    if n < m {
        return Err(Error::InvalidConfiguration(format!(
            "fewer points ({n}) than rows ({m})"
        )));
    }
    // ones in the rational row span <=> appending the ones row keeps rank m
    let homogeneous = {
        let mut stacked = IntMatrix::zero(m + 1, n);
        for i in 0..m {
            for j in 0..n {
                *stacked.at_mut(i, j) = a.at(i, j).clone();
            }
        }
        for j in 0..n {
            *stacked.at_mut(m, j) = BigInt::one();
        }
        stacked.rank() == m
    };
    if !homogeneous && opts.require_homogeneous {
        return Err(Error::NotHomogeneous(
            "the all-ones vector is not in the rational row span".into(),
        ));
    }
    if !opts.allow_repeats {
        for j in 0..n {
            for k in j + 1..n {
                if a.column(j) == a.column(k) {
                    return Err(Error::InvalidConfiguration(format!(
                        "columns {} and {} are equal",
                        j + 1,
                        k + 1
                    )));
                }
            }
        }
    }
    let spans_zm = a.transpose().gcd_maximal_minors()?.is_one();
    Ok(Configuration {
        a,
        labels: None,
        homogeneous,
        spans_zm,
    })
}

/// An n x r integer matrix whose columns are a Q-basis of the kernel
/// lattice of its parent configuration, together with its lattice index.
#[derive(Clone)]
pub struct LatticeBasis {
    b: IntMatrix,
    index_g: BigInt,
}

impl LatticeBasis {
    pub fn new(cfg: &Configuration, b: IntMatrix) -> Result<Self> {
        let g = lattice_index(cfg, &b)?;
        for j in 0..b.cols() {
            if !column_is_mixed(&b, j) {
                return Err(Error::InvalidBasis(format!(
                    "column {} has no sign change (not mixed)",
                    j + 1
                )));
            }
        }
        Ok(LatticeBasis { b, index_g: g })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.b
    }

    pub fn index_g(&self) -> &BigInt {
        &self.index_g
    }

    pub fn codim(&self) -> usize {
        self.b.cols()
    }
}

fn column_is_mixed(b: &IntMatrix, j: usize) -> bool {
    let mut pos = false;
    let mut neg = false;
    for i in 0..b.rows() {
        let e = b.at(i, j);
        pos |= e.is_positive();
        neg |= e.is_negative();
    }
    pos && neg
}

/// Saturated kernel lattice basis of the configuration: index 1, primitive
/// columns, A.B = 0.
pub fn kernel_lattice(cfg: &Configuration) -> Result<LatticeBasis> {
    let b = cfg.matrix().kernel_basis();
    if b.cols() == 0 {
        return Ok(LatticeBasis {
            b,
            index_g: BigInt::one(),
        });
    }
    let basis = LatticeBasis::new(cfg, b)?;
    debug_assert!(basis.index_g.is_one());
    Ok(basis)
}

/// Index of the lattice spanned by the columns of B inside the full kernel
/// lattice: the gcd of the maximal minors of B (the saturated kernel has
/// gcd 1).
pub fn lattice_index(cfg: &Configuration, b: &IntMatrix) -> Result<BigInt> {
    let r = cfg.codim();
    if b.rows() != cfg.n() || b.cols() != r {
        return Err(Error::InvalidBasis(format!(
            "expected a {}x{} basis matrix, got {}x{}",
            cfg.n(),
            r,
            b.rows(),
            b.cols()
        )));
    }
    if !cfg.matrix().mul(b)?.is_zero() {
        return Err(Error::InvalidBasis("columns are not in the kernel of A".into()));
    }
    if r == 0 {
        return Ok(BigInt::one());
    }
    let g = b.gcd_maximal_minors()?;
    if g.is_zero() {
        return Err(Error::InvalidBasis(format!("columns do not have full rank {r}")));
    }
    Ok(g)
}

/// True iff J_B and I_A agree after inverting all variables (index 1).
pub fn laurent_equal(cfg: &Configuration, b: &IntMatrix) -> Result<bool> {
    Ok(lattice_index(cfg, b)?.is_one())
}

/// Render each column v of B as the binomial x^{v+} - x^{v-}.
pub fn binomial_strings(b: &IntMatrix) -> Vec<String> {
    (0..b.cols()).map(|j| binomial_string(&b.column(j))).collect()
}

pub fn binomial_string(v: &[BigInt]) -> String {
    let monomial = |positive: bool| {
        let factors: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, e)| if positive { e.is_positive() } else { e.is_negative() })
            .map(|(i, e)| {
                let exp = e.abs();
                if exp.is_one() {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, exp)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    };
    format!("{} - {}", monomial(true), monomial(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::IntMatrix;

    fn twisted_cubic() -> Configuration {
        validate(IntMatrix::from_i64(&[&[1, 1, 1, 1], &[0, 1, 2, 3]])).unwrap()
    }

    #[test]
    fn validate_twisted_cubic() {
        let cfg = twisted_cubic();
        assert_eq!(cfg.dim(), 1);
        assert_eq!(cfg.codim(), 2);
        assert!(cfg.is_homogeneous());
        assert!(cfg.columns_span_zm());
    }

    #[test]
    fn validate_identity_and_rank_deficient() {
        let cfg = validate(IntMatrix::from_i64(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(cfg.codim(), 0);
        assert!(matches!(
            validate(IntMatrix::from_i64(&[&[0, 1], &[0, 2]])),
            Err(Error::InvalidConfiguration(_))
        ));
    }

    #[test]
    fn validate_homogeneity_and_repeats() {
        // rows (1,0),(0,2): ones not in row span over Q? (1,1) = row1 + row2/2, it is.
        // use a genuinely non-homogeneous example: single row (1,2)
        let a = IntMatrix::from_i64(&[&[1, 2]]);
        assert!(matches!(validate(a.clone()), Err(Error::NotHomogeneous(_))));
        let opts = ValidateOptions {
            require_homogeneous: false,
            ..Default::default()
        };
        let cfg = validate_with(a, &opts).unwrap();
        assert!(!cfg.is_homogeneous());

        let rep = IntMatrix::from_i64(&[&[1, 1, 1], &[0, 0, 1]]);
        assert!(matches!(validate(rep.clone()), Err(Error::InvalidConfiguration(_))));
        let opts = ValidateOptions {
            allow_repeats: true,
            ..Default::default()
        };
        assert!(validate_with(rep, &opts).is_ok());
    }

    #[test]
    fn kernel_lattice_twisted_cubic() {
        let cfg = twisted_cubic();
        let basis = kernel_lattice(&cfg).unwrap();
        assert_eq!(basis.codim(), 2);
        assert!(basis.index_g().is_one());
        assert!(cfg.matrix().mul(basis.matrix()).unwrap().is_zero());
    }

    #[test]
    fn kernel_lattice_degenerate_cases() {
        let cfg = validate(IntMatrix::from_i64(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(kernel_lattice(&cfg).unwrap().codim(), 0);

        // monomial curve a = (0,1,3): unique primitive kernel direction (2,-3,1)
        let cfg = validate(IntMatrix::from_i64(&[&[1, 1, 1], &[0, 1, 3]])).unwrap();
        let basis = kernel_lattice(&cfg).unwrap();
        assert_eq!(basis.codim(), 1);
        let col = basis.matrix().column(0);
        let expect: Vec<BigInt> = [2, -3, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(col, expect);
    }

    #[test]
    fn lattice_index_examples() {
        let cfg = twisted_cubic();
        let b = IntMatrix::from_i64(&[&[1, 0], &[-2, 1], &[1, -2], &[0, 1]]);
        assert_eq!(lattice_index(&cfg, &b).unwrap(), BigInt::from(1));
        assert!(laurent_equal(&cfg, &b).unwrap());

        let doubled = IntMatrix::from_i64(&[&[2, 0], &[-4, 1], &[2, -2], &[0, 1]]);
        assert_eq!(lattice_index(&cfg, &doubled).unwrap(), BigInt::from(2));
        assert!(!laurent_equal(&cfg, &doubled).unwrap());

        let not_kernel = IntMatrix::from_i64(&[&[1, 0], &[0, 1], &[0, 0], &[0, 0]]);
        assert!(matches!(
            lattice_index(&cfg, &not_kernel),
            Err(Error::InvalidBasis(_))
        ));
    }

    #[test]
    fn binomial_rendering() {
        let v: Vec<BigInt> = [1, -2, 1, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(binomial_string(&v), "x1*x3 - x2^2");
        let v: Vec<BigInt> = [0, 1, -2, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(binomial_string(&v), "x2*x4 - x3^2");
        let v: Vec<BigInt> = [1, -3, 3, -1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(binomial_string(&v), "x1*x3^3 - x2^3*x4");
    }
}
