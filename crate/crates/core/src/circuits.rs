//! Circuits of the kernel lattice: support-driven enumeration, conformality,
//! conformal decomposition, and circuitization of bases.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmat::{
    IntMatrix, RatVector, RationalEchelon, canonicalize_sign, is_zero_vec, primitive_part,
};
use crate::lattice::Configuration;

/// A primitive minimal-support kernel vector, stored with canonical sign
/// (first nonzero entry positive).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Circuit {
    vector: Vec<BigInt>,
    support: Vec<usize>,
}

impl Circuit {
    pub fn vector(&self) -> &[BigInt] {
        &self.vector
    }

    pub fn negated_vector(&self) -> Vec<BigInt> {
        self.vector.iter().map(|x| -x).collect()
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn positive_support(&self) -> Vec<usize> {
        positive_support(&self.vector)
    }

    pub fn negative_support(&self) -> Vec<usize> {
        negative_support(&self.vector)
    }

    pub fn len(&self) -> usize {
        self.vector.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vector.is_empty()
    }
}

impl PartialOrd for Circuit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical circuit order: support size, then support lex, then vector lex.
impl Ord for Circuit {
    fn cmp(&self, other: &Self) -> Ordering {
        self.support
            .len()
            .cmp(&other.support.len())
            .then_with(|| self.support.cmp(&other.support))
            .then_with(|| self.vector.cmp(&other.vector))
    }
}

pub fn positive_support(v: &[BigInt]) -> Vec<usize> {
    (0..v.len()).filter(|&i| v[i].is_positive()).collect()
}

pub fn negative_support(v: &[BigInt]) -> Vec<usize> {
    (0..v.len()).filter(|&i| v[i].is_negative()).collect()
}

pub fn support(v: &[BigInt]) -> Vec<usize> {
    (0..v.len()).filter(|&i| !v[i].is_zero()).collect()
}

/// The circuit supported exactly on `support_set`, if that set is a circuit
/// support: rank(A_S) = |S| - 1 with every proper subset independent.
///
/// The vector comes from the alternating maximal-minor formula applied to a
/// row-reduced copy of A_S (a set of rank(A_S) independent rows), which also
/// covers supports of less than maximal rank.
pub fn circuit_from_support(cfg: &Configuration, support_set: &[usize]) -> Result<Option<Circuit>> {
    let n = cfg.n();
    let k = support_set.len();
    for w in support_set.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Domain("support indices must be strictly increasing".into()));
        }
    }
    if support_set.iter().any(|&i| i >= n) {
        return Err(Error::Domain(format!("support index out of range (n = {n})")));
    }
    if k < 2 {
        return Ok(None);
    }
    let a_s = cfg.matrix().select_columns(support_set);
    // independent rows of A_S, found by rational elimination on the rows
    let mut echelon = RationalEchelon::new(k);
    let mut row_idx = Vec::new();
    for i in 0..a_s.rows() {
        if echelon.try_insert(&a_s.row(i)) {
            row_idx.push(i);
        }
    }
    if row_idx.len() != k - 1 {
        return Ok(None); // rank(A_S) != |S| - 1
    }
    let cols: Vec<usize> = (0..k).collect();
    let reduced = a_s.submatrix(&row_idx, &cols);
    let mut u = vec![BigInt::zero(); n];
    for (j, &idx) in support_set.iter().enumerate() {
        let minor_cols: Vec<usize> = (0..k).filter(|&c| c != j).collect();
        let all_rows: Vec<usize> = (0..k - 1).collect();
        let d = reduced.submatrix(&all_rows, &minor_cols).det()?;
        if d.is_zero() {
            return Ok(None); // some proper subset is dependent
        }
        u[idx] = if j % 2 == 0 { d } else { -d };
    }
    let mut v = primitive_part(&u)?;
    canonicalize_sign(&mut v);
    debug_assert!(is_zero_vec(&cfg.matrix().mul_vec(&v)?));
    Ok(Some(Circuit {
        support: support_set.to_vec(),
        vector: v,
    }))
}

/// All circuits of the kernel lattice, once each up to sign, in canonical
/// order. Subset tree over column supports with independence pruning: only
/// independent prefixes are extended, and a dependent extension is a circuit
/// support exactly when the induced kernel vector has full support.
pub fn enumerate_circuits(cfg: &Configuration) -> Result<Vec<Circuit>> {
    let columns = cfg.matrix().columns();
    let mut found = Vec::new();
    let mut echelon = RationalEchelon::new(cfg.m());
    let mut prefix: Vec<usize> = Vec::new();

    fn dfs(
        cfg: &Configuration,
        columns: &[Vec<BigInt>],
        start: usize,
        echelon: &mut RationalEchelon,
        prefix: &mut Vec<usize>,
        found: &mut Vec<Circuit>,
    ) -> Result<()> {
        for j in start..columns.len() {
            if echelon.try_insert(&columns[j]) {
                prefix.push(j);
                dfs(cfg, columns, j + 1, echelon, prefix, found)?;
                prefix.pop();
                echelon.pop();
            } else {
                let mut candidate = prefix.clone();
                candidate.push(j);
                if let Some(c) = circuit_from_support(cfg, &candidate)? {
                    found.push(c);
                }
            }
        }
        Ok(())
    }

    dfs(cfg, &columns, 0, &mut echelon, &mut prefix, &mut found)?;
    found.sort();
    Ok(found)
}

/// supp+(u) within supp+(v) and supp-(u) within supp-(v).
pub fn is_conformal(u: &[BigInt], v: &[BigInt]) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::Dimension(format!(
            "conformality needs equal lengths, got {} and {}",
            u.len(),
            v.len()
        )));
    }
    Ok(u.iter().zip(v).all(|(ui, vi)| {
        (!ui.is_positive() || vi.is_positive()) && (!ui.is_negative() || vi.is_negative())
    }))
}

fn rational_is_conformal(u: &[BigInt], rem: &RatVector) -> bool {
    u.iter().enumerate().all(|(i, ui)| {
        (!ui.is_positive() || rem.get(i).is_positive())
            && (!ui.is_negative() || rem.get(i).is_negative())
    })
}

/// One term of a conformal decomposition: a positive rational coefficient
/// times a circuit up to sign.
#[derive(Clone, Debug)]
pub struct ConformalTerm {
    pub coefficient: BigRational,
    pub vector: Vec<BigInt>,
}

/// Write a kernel vector as a positive rational combination of circuits,
/// each conformal to v. Greedy: pick a conformal circuit inside the current
/// support, subtract the largest multiple keeping the remainder conformal
/// to v (this zeroes at least one coordinate), repeat. Term count is at
/// most |supp(v)|.
pub fn conformal_decomposition(
    cfg: &Configuration,
    v: &[BigInt],
    circuits: &[Circuit],
) -> Result<Vec<ConformalTerm>> {
    if v.len() != cfg.n() {
        return Err(Error::Dimension(format!(
            "vector length {} does not match n = {}",
            v.len(),
            cfg.n()
        )));
    }
    if is_zero_vec(v) {
        return Err(Error::Domain("cannot decompose the zero vector".into()));
    }
    if !is_zero_vec(&cfg.matrix().mul_vec(v)?) {
        return Err(Error::Domain("vector is not in the kernel of A".into()));
    }
    let mut rem = RatVector::from_int(v);
    let mut terms = Vec::new();
    while !rem.is_zero() {
        let mut picked: Option<Vec<BigInt>> = None;
        'pick: for c in circuits {
            for w in [c.vector().to_vec(), c.negated_vector()] {
                if rational_is_conformal(&w, &rem) {
                    picked = Some(w);
                    break 'pick;
                }
            }
        }
        let Some(w) = picked else {
            return Err(Error::Invariant(
                "no conformal circuit found for a nonzero kernel remainder".into(),
            ));
        };
        // largest q with rem - q*w still conformal to v: min ratio on supp(w)
        let q = support(&w)
            .into_iter()
            .map(|i| rem.get(i) / BigRational::from(w[i].clone()))
            .min()
            .expect("circuit support is nonempty");
        debug_assert!(q.is_positive());
        rem.sub_scaled(&q, &w);
        terms.push(ConformalTerm {
            coefficient: q,
            vector: w,
        });
    }
    Ok(terms)
}

/// Replace every non-circuit column of B by a conformal circuit from its
/// decomposition, preserving rank. Ties among admissible replacement
/// circuits go to the lexicographically smallest support.
pub fn circuitize_basis(cfg: &Configuration, b: &IntMatrix) -> Result<IntMatrix> {
    let r = cfg.codim();
    crate::lattice::lattice_index(cfg, b)?; // validates kernel membership and rank
    let circuits = enumerate_circuits(cfg)?;
    let mut cols = b.columns();
    for i in 0..r {
        let col = &cols[i];
        let p = primitive_part(col)?;
        if is_circuit_vector(cfg, &p)? {
            cols[i] = p;
            continue;
        }
        let mut candidates: Vec<Vec<BigInt>> = conformal_decomposition(cfg, col, &circuits)?
            .into_iter()
            .map(|t| t.vector)
            .collect();
        candidates.sort_by_key(|w| support(w));
        let mut replaced = false;
        for w in candidates {
            let mut trial = cols.clone();
            trial[i] = w.clone();
            let m = IntMatrix::from_columns(cfg.n(), &trial)?;
            if m.rank() == r {
                cols[i] = w;
                replaced = true;
                break;
            }
        }
        if !replaced {
            return Err(Error::Invariant(
                "no decomposition circuit preserves linear independence".into(),
            ));
        }
    }
    IntMatrix::from_columns(cfg.n(), &cols)
}

/// Is v (assumed primitive, any orientation) a circuit of the lattice?
fn is_circuit_vector(cfg: &Configuration, v: &[BigInt]) -> Result<bool> {
    let supp = support(v);
    let Some(c) = circuit_from_support(cfg, &supp)? else {
        return Ok(false);
    };
    let mut canon = v.to_vec();
    canonicalize_sign(&mut canon);
    Ok(canon == c.vector)
}

/// Deterministic n x r matrix from a circuit selection.
pub fn circuits_to_matrix(n: usize, selection: &[&Circuit]) -> Result<IntMatrix> {
    let cols: Vec<Vec<BigInt>> = selection.iter().map(|c| c.vector().to_vec()).collect();
    IntMatrix::from_columns(n, &cols)
}

/// Opportunistic check of the n - m bound on decomposition length; never
/// asserted, only reported.
pub fn within_codim_bound(cfg: &Configuration, terms: &[ConformalTerm]) -> bool {
    terms.len() <= cfg.codim().max(1)
}
