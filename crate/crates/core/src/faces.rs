//! Central hyperplane arrangements over exact rationals and their face
//! monoids.
//!
//! A face is a sign vector over the normals that is realized by some point:
//! `sign(n_i . x) = sigma_i` for every i. Realizability is decided exactly:
//! equalities are eliminated by substitution (a rational null-space basis)
//! and the remaining strict inequalities by Fourier-Motzkin elimination,
//! which also yields a rational witness point. No floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

pub type Rat = BigRational;

/// Cap on the number of hyperplanes (3^n candidate sign vectors).
pub const MAX_HYPERPLANES: usize = 12;

const ELIMINATION_ROW_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn of(value: &Rat) -> Sign {
        if value.is_zero() {
            Sign::Zero
        } else if value.is_positive() {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }
}

/// A `{-,0,+}` string over the hyperplanes of an arrangement.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignVector(signs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn zeros(&self) -> usize {
        self.0.iter().filter(|&&s| s == Sign::Zero).count()
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&s| s == Sign::Zero)
    }

    /// A chamber has no zero coordinate.
    pub fn is_chamber(&self) -> bool {
        self.0.iter().all(|&s| s != Sign::Zero)
    }
}

impl std::fmt::Display for SignVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

/// `sigma(AB)`: A's sign where nonzero, B's sign elsewhere.
pub fn face_product(a: &SignVector, b: &SignVector) -> Result<SignVector> {
    if a.len() != b.len() {
        return Err(Error::SignLength { a: a.len(), b: b.len() });
    }
    Ok(SignVector(
        a.0.iter()
            .zip(&b.0)
            .map(|(&sa, &sb)| if sa != Sign::Zero { sa } else { sb })
            .collect(),
    ))
}

/// The face order: `A <= B` iff each coordinate of A is zero or agrees
/// with B. The origin is the minimum and chambers are the maximal faces.
pub fn face_leq(a: &SignVector, b: &SignVector) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::SignLength { a: a.len(), b: b.len() });
    }
    Ok(a.0.iter().zip(&b.0).all(|(&sa, &sb)| sa == Sign::Zero || sa == sb))
}

/// A realizable sign vector with an exact witness point.
#[derive(Debug, Clone)]
pub struct Face {
    pub sign: SignVector,
    pub witness: Vec<Rat>,
}

/// A central arrangement: nonzero rational normals spanning the full
/// space, so the common intersection of the hyperplanes is the origin.
#[derive(Debug, Clone)]
pub struct Arrangement {
    dim: usize,
    normals: Vec<Vec<Rat>>,
}

impl Arrangement {
    pub fn from_normals(dim: usize, normals: Vec<Vec<Rat>>) -> Result<Self> {
        if normals.is_empty() || dim == 0 {
            return Err(Error::InvalidSpec("need at least one normal and dim >= 1".into()));
        }
        for (index, normal) in normals.iter().enumerate() {
            assert_eq!(normal.len(), dim, "normal length must equal dim");
            if normal.iter().all(|x| x.is_zero()) {
                return Err(Error::ZeroNormal { index });
            }
        }
        let rank = rank(&normals, dim);
        if rank < dim {
            return Err(Error::RankDeficient { rank, dim });
        }
        Ok(Arrangement { dim, normals })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Vec<Rat>] {
        &self.normals
    }

    pub fn hyperplane_count(&self) -> usize {
        self.normals.len()
    }

    /// All realizable sign vectors, each with a verified rational witness,
    /// in lexicographic sign order (- < 0 < +).
    pub fn faces(&self) -> Result<Vec<Face>> {
        let k = self.normals.len();
        if k > MAX_HYPERPLANES {
            return Err(Error::FaceBudget { hyperplanes: k, max: MAX_HYPERPLANES });
        }
        let mut out = Vec::new();
        let mut signs = vec![Sign::Neg; k];
        self.enumerate(&mut signs, 0, &mut out)?;
        Ok(out)
    }

    fn enumerate(&self, signs: &mut Vec<Sign>, pos: usize, out: &mut Vec<Face>) -> Result<()> {
        if pos == signs.len() {
            let candidate = SignVector(signs.clone());
            if let Some(witness) = self.witness_for(&candidate)? {
                // Every accepted sign vector must re-verify exactly.
                for (i, normal) in self.normals.iter().enumerate() {
                    assert_eq!(Sign::of(&dot(normal, &witness)), candidate.0[i]);
                }
                out.push(Face { sign: candidate, witness });
            }
            return Ok(());
        }
        for s in [Sign::Neg, Sign::Zero, Sign::Pos] {
            signs[pos] = s;
            self.enumerate(signs, pos + 1, out)?;
        }
        Ok(())
    }

    /// Exact feasibility of the sign system; returns a witness with the
    /// denominators cleared.
    fn witness_for(&self, signs: &SignVector) -> Result<Option<Vec<Rat>>> {
        let equalities: Vec<Vec<Rat>> = self
            .normals
            .iter()
            .zip(signs.signs())
            .filter(|(_, &s)| s == Sign::Zero)
            .map(|(n, _)| n.clone())
            .collect();
        // Strict rows are oriented so every constraint reads row . x > 0.
        let strict: Vec<Vec<Rat>> = self
            .normals
            .iter()
            .zip(signs.signs())
            .filter(|(_, &s)| s != Sign::Zero)
            .map(|(n, &s)| {
                n.iter()
                    .map(|x| if s == Sign::Pos { x.clone() } else { -x.clone() })
                    .collect()
            })
            .collect();
        let basis = null_space(&equalities, self.dim);
        if basis.is_empty() {
            // Equalities pin x = 0; feasible iff no strict row remains.
            return Ok(if strict.is_empty() {
                Some(vec![Rat::zero(); self.dim])
            } else {
                None
            });
        }
        // Express each strict row over the free coordinates.
        let reduced: Vec<Vec<Rat>> = strict
            .iter()
            .map(|row| basis.iter().map(|b| dot(row, b)).collect())
            .collect();
        match strict_feasible(reduced)? {
            None => Ok(None),
            Some(y) => {
                let mut x = vec![Rat::zero(); self.dim];
                for (b, yi) in basis.iter().zip(&y) {
                    for (xi, bi) in x.iter_mut().zip(b) {
                        *xi += bi * yi;
                    }
                }
                Ok(Some(clear_denominators(x)))
            }
        }
    }

    /// The monoid of realizable faces under the sign-composition product,
    /// with the origin as identity. Checks the idempotent and absorption
    /// laws, the order-product equivalence, R-triviality, and that the
    /// coset order of a (nontrivial central) arrangement is never linear.
    pub fn face_monoid(&self) -> Result<(FiniteMonoid, Vec<Face>)> {
        let faces = self.faces()?;
        let index: std::collections::HashMap<&SignVector, usize> =
            faces.iter().enumerate().map(|(i, f)| (&f.sign, i)).collect();
        let size = faces.len();
        let mut table = vec![vec![0usize; size]; size];
        for a in 0..size {
            for b in 0..size {
                let product = face_product(&faces[a].sign, &faces[b].sign)?;
                let p = *index.get(&product).ok_or_else(|| Error::FaceClosure {
                    a: faces[a].sign.to_string(),
                    b: faces[b].sign.to_string(),
                })?;
                table[a][b] = p;
            }
        }
        let identity = faces
            .iter()
            .position(|f| f.sign.is_origin())
            .expect("the origin is always realizable in a central arrangement");
        let monoid = FiniteMonoid::from_cayley(&table, identity, None)?;
        for a in 0..size {
            assert_eq!(monoid.mul(a, a), a, "faces are idempotent");
            for b in 0..size {
                let ab = monoid.mul(a, b);
                assert_eq!(monoid.mul(ab, a), ab, "aba = ab");
                let leq = face_leq(&faces[a].sign, &faces[b].sign)?;
                assert_eq!(ab == b, leq, "ab = b iff a <= b");
            }
        }
        assert!(monoid.is_r_trivial(), "face monoids are R-trivial");
        assert!(
            !monoid.is_coset_order_linear(),
            "a central arrangement has at least two chambers"
        );
        Ok((monoid, faces))
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rank of a rational matrix by Gaussian elimination.
fn rank(rows: &[Vec<Rat>], cols: usize) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..m.len()).find(|&r| !m[r][col].is_zero());
        if let Some(p) = pivot {
            m.swap(rank, p);
            let lead = m[rank][col].clone();
            for entry in m[rank].iter_mut() {
                *entry /= lead.clone();
            }
            for r in 0..m.len() {
                if r != rank && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in 0..cols {
                        let delta = &factor * &m[rank][c];
                        m[r][c] -= delta;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Basis of the solution space of `rows . x = 0`, one vector per free
/// column of the reduced system.
fn null_space(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..m.len()).find(|&r| !m[r][col].is_zero());
        if let Some(p) = pivot {
            m.swap(rank, p);
            let lead = m[rank][col].clone();
            for entry in m[rank].iter_mut() {
                *entry /= lead.clone();
            }
            for r in 0..m.len() {
                if r != rank && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in 0..cols {
                        let delta = &factor * &m[rank][c];
                        m[r][c] -= delta;
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
        }
    }
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free_cols
        .iter()
        .map(|&fc| {
            let mut v = vec![Rat::zero(); cols];
            v[fc] = Rat::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[r][fc].clone();
            }
            v
        })
        .collect()
}

/// Fourier-Motzkin feasibility for the homogeneous strict system
/// `row . y > 0` for every row; returns a witness if feasible.
fn strict_feasible(rows: Vec<Vec<Rat>>) -> Result<Option<Vec<Rat>>> {
    if rows.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let vars = rows[0].len();
    if vars == 0 {
        // Constant rows are all 0 > 0.
        return Ok(None);
    }
    // Eliminate variables from the back; snapshots drive back-substitution.
    let mut snapshots: Vec<Vec<Vec<Rat>>> = Vec::with_capacity(vars);
    let mut current = rows;
    for var in (0..vars).rev() {
        if current.iter().any(|r| r.iter().all(|x| x.is_zero())) {
            return Ok(None);
        }
        snapshots.push(current.clone());
        let mut zero_rows: Vec<Vec<Rat>> = Vec::new();
        let mut pos_rows: Vec<Vec<Rat>> = Vec::new();
        let mut neg_rows: Vec<Vec<Rat>> = Vec::new();
        for row in current {
            match Sign::of(&row[var]) {
                Sign::Zero => zero_rows.push(row),
                Sign::Pos => pos_rows.push(row),
                Sign::Neg => neg_rows.push(row),
            }
        }
        let mut next: Vec<Vec<Rat>> = Vec::new();
        for mut row in zero_rows {
            row.truncate(var);
            next.push(row);
        }
        for p in &pos_rows {
            for n in &neg_rows {
                // Positive combination cancelling `var`.
                let row: Vec<Rat> = (0..var)
                    .map(|c| &p[c] * (-n[var].clone()) + &n[c] * p[var].clone())
                    .collect();
                next.push(row);
                if next.len() > ELIMINATION_ROW_BUDGET {
                    return Err(Error::EliminationBudget);
                }
            }
        }
        next.sort();
        next.dedup();
        current = next;
        if current.iter().any(|r| r.is_empty()) {
            // A zero-variable row is the contradiction 0 > 0.
            return Ok(None);
        }
    }
    // Feasible; back-substitute var by var.
    let mut assignment = vec![Rat::zero(); vars];
    for var in 0..vars {
        let snapshot = &snapshots[vars - 1 - var];
        let mut lower: Option<Rat> = None;
        let mut upper: Option<Rat> = None;
        for row in snapshot {
            let coeff = &row[var];
            if coeff.is_zero() {
                continue;
            }
            // row[var] * y_var + rest > 0; the other columns of this
            // snapshot are variables assigned in earlier iterations.
            let rest: Rat = (0..var).map(|c| &row[c] * &assignment[c]).sum();
            let bound = -rest / coeff.clone();
            if coeff.is_positive() {
                lower = Some(match lower {
                    Some(l) if l >= bound => l,
                    _ => bound,
                });
            } else {
                upper = Some(match upper {
                    Some(u) if u <= bound => u,
                    _ => bound,
                });
            }
        }
        assignment[var] = match (lower, upper) {
            (Some(l), Some(u)) => {
                debug_assert!(l < u, "FM guarantees an open interval");
                (l + u) / Rat::from_integer(BigInt::from(2))
            }
            (Some(l), None) => l + Rat::one(),
            (None, Some(u)) => u - Rat::one(),
            (None, None) => Rat::zero(),
        };
    }
    Ok(Some(assignment))
}

/// Scale a rational vector by the least common multiple of denominators.
fn clear_denominators(v: Vec<Rat>) -> Vec<Rat> {
    let mut lcm = BigInt::one();
    for x in &v {
        lcm = lcm.lcm(x.denom());
    }
    let scale = Rat::from_integer(lcm);
    v.into_iter().map(|x| x * &scale).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(BigInt::from(n))
    }

    fn three_lines() -> Arrangement {
        Arrangement::from_normals(
            2,
            vec![
                vec![rat(1), rat(0)],
                vec![rat(0), rat(1)],
                vec![rat(1), rat(-1)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn zero_normal_is_rejected() {
        let err = Arrangement::from_normals(2, vec![vec![rat(0), rat(0)]]).unwrap_err();
        assert!(matches!(err, Error::ZeroNormal { index: 0 }));
    }

    #[test]
    fn rank_deficient_is_rejected() {
        let err = Arrangement::from_normals(2, vec![vec![rat(1), rat(0)]]).unwrap_err();
        assert!(matches!(err, Error::RankDeficient { rank: 1, dim: 2 }));
    }

    #[test]
    fn one_dimensional_arrangement_has_three_faces() {
        let a = Arrangement::from_normals(1, vec![vec![rat(1)]]).unwrap();
        let faces = a.faces().unwrap();
        assert_eq!(faces.len(), 3);
        let origin = faces.iter().find(|f| f.sign.is_origin()).unwrap();
        assert!(origin.witness.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn three_lines_have_thirteen_faces() {
        let a = three_lines();
        let faces = a.faces().unwrap();
        assert_eq!(faces.len(), 13);
        let chambers = faces.iter().filter(|f| f.sign.is_chamber()).count();
        let rays = faces.iter().filter(|f| f.sign.zeros() == 1).count();
        let origins = faces.iter().filter(|f| f.sign.is_origin()).count();
        assert_eq!((chambers, rays, origins), (6, 6, 1));
    }

    #[test]
    fn witnesses_are_integral_and_exact() {
        let a = three_lines();
        for face in a.faces().unwrap() {
            for x in &face.witness {
                assert!(x.denom().is_one(), "witness should be integral");
            }
            for (normal, &expected) in a.normals().iter().zip(face.sign.signs()) {
                assert_eq!(Sign::of(&dot(normal, &face.witness)), expected);
            }
        }
    }

    #[test]
    fn product_rule_and_identity() {
        let a = SignVector::new(vec![Sign::Pos, Sign::Zero, Sign::Neg]);
        let b = SignVector::new(vec![Sign::Neg, Sign::Neg, Sign::Pos]);
        assert_eq!(
            face_product(&a, &b).unwrap(),
            SignVector::new(vec![Sign::Pos, Sign::Neg, Sign::Neg])
        );
        let origin = SignVector::new(vec![Sign::Zero; 3]);
        assert_eq!(face_product(&origin, &b).unwrap(), b);
        assert_eq!(face_product(&a, &a).unwrap(), a);
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let a = SignVector::new(vec![Sign::Pos]);
        let b = SignVector::new(vec![Sign::Pos, Sign::Neg]);
        assert!(face_product(&a, &b).is_err());
        assert!(face_leq(&a, &b).is_err());
    }

    #[test]
    fn order_examples() {
        let mid = SignVector::new(vec![Sign::Pos, Sign::Zero, Sign::Neg]);
        let chamber = SignVector::new(vec![Sign::Pos, Sign::Pos, Sign::Neg]);
        let other = SignVector::new(vec![Sign::Neg, Sign::Pos, Sign::Neg]);
        let origin = SignVector::new(vec![Sign::Zero; 3]);
        assert!(face_leq(&origin, &mid).unwrap());
        assert!(face_leq(&mid, &chamber).unwrap());
        assert!(!face_leq(&mid, &other).unwrap());
    }

    #[test]
    fn face_monoid_of_single_hyperplane_is_nonlinear() {
        let a = Arrangement::from_normals(1, vec![vec![rat(1)]]).unwrap();
        let (m, faces) = a.face_monoid().unwrap();
        assert_eq!(m.size(), 3);
        assert!(!m.is_coset_order_linear());
        assert!(m.is_r_trivial());
        assert_eq!(faces.len(), 3);
    }

    #[test]
    fn coordinate_planes_in_three_dimensions() {
        // Every sign pattern is realizable for the coordinate planes.
        let a = Arrangement::from_normals(
            3,
            vec![
                vec![rat(1), rat(0), rat(0)],
                vec![rat(0), rat(1), rat(0)],
                vec![rat(0), rat(0), rat(1)],
            ],
        )
        .unwrap();
        let faces = a.faces().unwrap();
        assert_eq!(faces.len(), 27);
        let (m, _) = a.face_monoid().unwrap();
        assert_eq!(m.size(), 27);
    }

    #[test]
    fn dependent_normal_cuts_down_the_sign_patterns() {
        // x, y, z together with x + y + z: many patterns become infeasible,
        // e.g. all three coordinates positive but their sum negative.
        let a = Arrangement::from_normals(
            3,
            vec![
                vec![rat(1), rat(0), rat(0)],
                vec![rat(0), rat(1), rat(0)],
                vec![rat(0), rat(0), rat(1)],
                vec![rat(1), rat(1), rat(1)],
            ],
        )
        .unwrap();
        let faces = a.faces().unwrap();
        assert!(faces.len() < 81);
        let realizable: std::collections::HashSet<String> =
            faces.iter().map(|f| f.sign.to_string()).collect();
        assert!(!realizable.contains("+++-"));
        assert!(!realizable.contains("+++0"));
        assert!(realizable.contains("++-0"));
        // Closure under the product still holds.
        let (m, _) = a.face_monoid().unwrap();
        assert_eq!(m.size(), faces.len());
    }

    #[test]
    fn product_is_associative_exhaustively_on_short_vectors() {
        for len in 1..=4 {
            let mut vectors = Vec::new();
            let count = 3usize.pow(len as u32);
            for code in 0..count {
                let mut signs = Vec::with_capacity(len);
                let mut c = code;
                for _ in 0..len {
                    signs.push(match c % 3 {
                        0 => Sign::Neg,
                        1 => Sign::Zero,
                        _ => Sign::Pos,
                    });
                    c /= 3;
                }
                vectors.push(SignVector::new(signs));
            }
            for a in &vectors {
                for b in &vectors {
                    for c in &vectors {
                        let left =
                            face_product(&face_product(a, b).unwrap(), c).unwrap();
                        let right =
                            face_product(a, &face_product(b, c).unwrap()).unwrap();
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }
}
