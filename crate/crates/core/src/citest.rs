//! The complete-intersection decision: a basis ideal is a complete
//! intersection exactly when every mixed n' x r' submatrix of B has
//! n' >= r'. `find_violation` is the fast search, `brute_force_violation`
//! the exhaustive reference.

use itertools::Itertools;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactmat::IntMatrix;

const BITSET_CAP: usize = 128;

/// Entrywise {-1, 0, +1} pattern of a basis matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "expected {} entries for a {}x{} sign matrix, got {}",
                rows * cols,
                rows,
                cols,
                entries.len()
            )));
        }
        if entries.iter().any(|&e| !(-1..=1).contains(&e)) {
            return Err(Error::Domain("sign matrix entries must be -1, 0 or +1".into()));
        }
        Ok(SignMatrix { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.cols + j]
    }

    /// Read rows of `+ - 0` tokens (the display format of sign matrices);
    /// no header, dimensions are inferred, `#` starts a comment.
    pub fn parse_text(text: &str) -> Result<SignMatrix> {
        let mut rows: Vec<Vec<i8>> = Vec::new();
        for (lno, line) in text.lines().enumerate() {
            let stripped = line.split('#').next().unwrap_or("").trim();
            if stripped.is_empty() {
                continue;
            }
            let mut row = Vec::new();
            for tok in stripped.split_whitespace() {
                row.push(match tok {
                    "+" | "+1" | "1" => 1,
                    "-" | "-1" => -1,
                    "0" => 0,
                    _ => {
                        return Err(Error::Parse {
                            line: lno + 1,
                            msg: format!("bad sign token `{tok}`"),
                        })
                    }
                });
            }
            if let Some(first) = rows.first() {
                if row.len() != first.len() {
                    return Err(Error::Parse {
                        line: lno + 1,
                        msg: format!("expected {} tokens, got {}", first.len(), row.len()),
                    });
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "empty sign matrix".into(),
            });
        }
        let r = rows.len();
        let c = rows[0].len();
        SignMatrix::new(r, c, rows.concat())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<&str> = (0..self.cols)
                .map(|j| match self.at(i, j) {
                    1 => "+",
                    -1 => "-",
                    _ => "0",
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    fn column_masks(&self, j: usize) -> (u128, u128) {
        let mut pos = 0u128;
        let mut neg = 0u128;
        for i in 0..self.rows {
            match self.at(i, j) {
                1 => pos |= 1 << i,
                -1 => neg |= 1 << i,
                _ => {}
            }
        }
        (pos, neg)
    }
}

pub fn sign_pattern(m: &IntMatrix) -> SignMatrix {
    let entries = (0..m.rows())
        .flat_map(|i| {
            (0..m.cols()).map(move |j| {
                let e = m.at(i, j);
                if e.is_positive() {
                    1
                } else if e.is_negative() {
                    -1
                } else {
                    0
                }
            })
        })
        .collect();
    SignMatrix {
        rows: m.rows(),
        cols: m.cols(),
        entries,
    }
}

/// Every column contains both a +1 and a -1.
pub fn is_mixed(s: &SignMatrix) -> bool {
    (0..s.cols()).all(|j| {
        let (pos, neg) = s.column_masks(j);
        pos != 0 && neg != 0
    })
}

/// A mixed submatrix with fewer rows than columns, refuting the complete
/// intersection property. Indices are 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MixedWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MixedWitness {
    /// The submatrix it names must be mixed with strictly fewer rows than
    /// columns; checked before any witness is surfaced.
    pub fn verify(&self, s: &SignMatrix) -> bool {
        if self.rows.len() >= self.cols.len() {
            return false;
        }
        self.cols.iter().all(|&j| {
            let mut pos = false;
            let mut neg = false;
            for &i in &self.rows {
                match s.at(i, j) {
                    1 => pos = true,
                    -1 => neg = true,
                    _ => {}
                }
            }
            pos && neg
        })
    }
}

/// Search for a mixed n' x r' submatrix with n' < r'.
///
/// Column subsets are scanned smallest-first (a violation inside a subset is
/// a violation of any superset, so the first hit is minimal in column
/// count). For a subset of size s the question is whether some row set of
/// size < s makes every column mixed; that is a covering problem over the
/// 2s requirements "column j sees a + row" / "column j sees a - row",
/// solved exactly by branch and bound. A none-return is exhaustive.
pub fn find_violation(s: &SignMatrix) -> Option<MixedWitness> {
    assert!(
        s.rows() <= BITSET_CAP,
        "find_violation supports at most {BITSET_CAP} rows"
    );
    let masks: Vec<(u128, u128)> = (0..s.cols()).map(|j| s.column_masks(j)).collect();
    // a mixed submatrix needs two rows, so violations start at 3 columns
    for size in 3..=s.cols() {
        for subset in (0..s.cols()).combinations(size) {
            if subset.iter().any(|&j| masks[j].0 == 0 || masks[j].1 == 0) {
                continue; // a column with no + or no - rows can never be mixed
            }
            let requirements: Vec<u128> = subset
                .iter()
                .flat_map(|&j| [masks[j].0, masks[j].1])
                .collect();
            if let Some(rows) = cover_rows(&requirements, 0u128, size - 1) {
                let witness = MixedWitness {
                    rows: bits(rows),
                    cols: subset,
                };
                debug_assert!(witness.verify(s));
                return Some(witness);
            }
        }
    }
    None
}

/// Rows (at most `limit` more) covering every requirement mask; branch on
/// the thinnest uncovered requirement.
fn cover_rows(requirements: &[u128], chosen: u128, limit: usize) -> Option<u128> {
    let uncovered = requirements
        .iter()
        .filter(|&&req| req & chosen == 0)
        .min_by_key(|req| req.count_ones());
    let Some(&req) = uncovered else {
        return Some(chosen);
    };
    if limit == 0 {
        return None;
    }
    let mut rest = req;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest ^= bit;
        if let Some(rows) = cover_rows(requirements, chosen | bit, limit - 1) {
            return Some(rows);
        }
    }
    None
}

fn bits(mask: u128) -> Vec<usize> {
    (0..BITSET_CAP).filter(|&i| mask & (1 << i) != 0).collect()
}

pub fn is_complete_intersection(s: &SignMatrix) -> bool {
    find_violation(s).is_none()
}

pub fn is_complete_intersection_matrix(b: &IntMatrix) -> bool {
    is_complete_intersection(&sign_pattern(b))
}

pub const BRUTE_FORCE_DEFAULT_CAP: usize = 12;

/// Reference semantics for `find_violation`: scan every (row subset, column
/// subset) pair. Row count is capped (default 12) to bound the 2^n * 2^r
/// work.
pub fn brute_force_violation(s: &SignMatrix, cap: Option<usize>) -> Result<Option<MixedWitness>> {
    let cap = cap.unwrap_or(BRUTE_FORCE_DEFAULT_CAP);
    if s.rows() > cap {
        return Err(Error::SizeCap(format!(
            "brute force violation scan limited to {cap} rows, got {}",
            s.rows()
        )));
    }
    let n = s.rows();
    let r = s.cols();
    for col_mask in 1u64..(1 << r) {
        let cols: Vec<usize> = (0..r).filter(|&j| col_mask & (1 << j) != 0).collect();
        for row_mask in 1u64..(1 << n) {
            if (row_mask.count_ones() as usize) >= cols.len() {
                continue;
            }
            let rows: Vec<usize> = (0..n).filter(|&i| row_mask & (1 << i) != 0).collect();
            let w = MixedWitness {
                rows,
                cols: cols.clone(),
            };
            if w.verify(s) {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

/// Two adjacent rows with no zero entry, if any. For alternating-sign
/// circuit matrices with r >= 3 this is an instant refutation: the 2 x 3
/// submatrix on any three columns is mixed, and <x_j, x_k> is then an
/// associated prime of the basis ideal. Indices are 0-based.
pub fn find_two_full_rows(s: &SignMatrix) -> Option<(usize, usize)> {
    let full = |i: usize| (0..s.cols()).all(|j| s.at(i, j) != 0);
    (0..s.rows().saturating_sub(1)).find_map(|i| {
        if full(i) && full(i + 1) {
            Some((i, i + 1))
        } else {
            None
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::paper_sign_matrix;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn sm(rows: &[&[i8]]) -> SignMatrix {
        let r = rows.len();
        let c = rows[0].len();
        SignMatrix::new(r, c, rows.concat()).unwrap()
    }

    #[test]
    fn sign_pattern_examples() {
        let m = IntMatrix::from_i64(&[&[1], &[-2], &[1], &[0]]);
        let s = sign_pattern(&m);
        assert_eq!(
            (0..4).map(|i| s.at(i, 0)).collect::<Vec<_>>(),
            vec![1, -1, 1, 0]
        );
        assert_eq!(sign_pattern(&IntMatrix::zero(2, 2)), sm(&[&[0, 0], &[0, 0]]));
    }

    #[test]
    fn is_mixed_examples() {
        assert!(is_mixed(&sm(&[&[1], &[-1]])));
        assert!(!is_mixed(&sm(&[&[1], &[1]])));
        assert!(!is_mixed(&sm(&[&[0], &[0]])));
    }

    #[test]
    fn find_violation_fully_mixed_2x3() {
        let s = sm(&[&[1, 1, 1], &[-1, -1, -1]]);
        let w = find_violation(&s).unwrap();
        assert_eq!(w.rows, vec![0, 1]);
        assert_eq!(w.cols, vec![0, 1, 2]);
        assert!(w.verify(&s));
        assert!(!is_complete_intersection(&s));
    }

    #[test]
    fn find_violation_negative_cases() {
        let s = sm(&[&[1, 1], &[-1, -1], &[1, -1]]);
        assert!(find_violation(&s).is_none());
        assert!(brute_force_violation(&s, None).unwrap().is_none());
        // paper's 10x7 example is a complete intersection
        let p = paper_sign_matrix();
        assert!(find_violation(&p).is_none());
        assert!(brute_force_violation(&p, None).unwrap().is_none());
    }

    #[test]
    fn brute_force_cap() {
        let s = SignMatrix::new(13, 1, vec![1; 13]).unwrap();
        assert!(matches!(
            brute_force_violation(&s, None),
            Err(Error::SizeCap(_))
        ));
        assert!(brute_force_violation(&s, Some(13)).is_ok());
    }

    #[test]
    fn two_full_rows_examples() {
        let p = paper_sign_matrix();
        assert!(find_two_full_rows(&p).is_none());
        assert!(find_two_full_rows(&sm(&[&[0, 0], &[0, 0]])).is_none());
        let s = sm(&[&[1, -1, 1], &[-1, 1, -1], &[0, 1, 0]]);
        assert_eq!(find_two_full_rows(&s), Some((0, 1)));
    }

    fn random_sign_matrix(rng: &mut StdRng, n: usize, r: usize) -> SignMatrix {
        let entries = (0..n * r).map(|_| rng.gen_range(-1i8..=1)).collect();
        SignMatrix::new(n, r, entries).unwrap()
    }

    #[test]
    fn oracle_equivalence_randomized() {
        let mut rng = StdRng::seed_from_u64(0xfade);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=8);
            let r = rng.gen_range(1..=5);
            let s = random_sign_matrix(&mut rng, n, r);
            let fast = find_violation(&s);
            let brute = brute_force_violation(&s, None).unwrap();
            assert_eq!(fast.is_some(), brute.is_some(), "disagreement on\n{}", s.to_text());
            if let Some(w) = fast {
                assert!(w.verify(&s));
            }
            if let Some(w) = brute {
                assert!(w.verify(&s));
            }
        }
    }

    #[test]
    fn monotonicity_randomized() {
        // a violation inside a column subset is a violation of the whole
        let mut rng = StdRng::seed_from_u64(0xa11);
        for _ in 0..300 {
            let n = rng.gen_range(2..=7);
            let r = rng.gen_range(2..=5);
            let s = random_sign_matrix(&mut rng, n, r);
            let keep: Vec<usize> = (0..r).filter(|_| rng.gen_bool(0.6)).collect();
            if keep.is_empty() {
                continue;
            }
            let entries: Vec<i8> = (0..n)
                .flat_map(|i| keep.iter().map(move |&j| (i, j)))
                .map(|(i, j)| s.at(i, j))
                .collect();
            let sub = SignMatrix::new(n, keep.len(), entries).unwrap();
            if find_violation(&sub).is_some() {
                assert!(find_violation(&s).is_some());
            }
        }
    }

    #[test]
    fn conformal_shrinking_never_creates_violation() {
        // zeroing entries of a CI matrix keeps it CI (the Proposition's
        // conformality argument, applied sign-wise)
        let mut rng = StdRng::seed_from_u64(0x5eed2);
        let mut checked = 0;
        while checked < 200 {
            let n = rng.gen_range(2..=7);
            let r = rng.gen_range(1..=4);
            let s = random_sign_matrix(&mut rng, n, r);
            if find_violation(&s).is_some() {
                continue;
            }
            checked += 1;
            let entries: Vec<i8> = (0..n * r)
                .map(|idx| {
                    let e = s.entries[idx];
                    if rng.gen_bool(0.3) {
                        0
                    } else {
                        e
                    }
                })
                .collect();
            let shrunk = SignMatrix::new(n, r, entries).unwrap();
            assert!(find_violation(&shrunk).is_none());
        }
    }

    #[test]
    fn sign_text_round_trip() {
        let p = paper_sign_matrix();
        let again = SignMatrix::parse_text(&p.to_text()).unwrap();
        assert_eq!(p, again);
        assert!(matches!(
            SignMatrix::parse_text("+ -\n+\n"),
            Err(Error::Parse { .. })
        ));
    }
}
