//! Irreducible character tables.
//!
//! Two construction paths share one validated representation:
//!
//! * a numerical path that simultaneously diagonalizes the class-sum
//!   multiplication matrices (random linear combinations split degenerate
//!   eigenspaces, with retries on fresh randomness), and
//! * closed-form built-in tables for the recognized cyclic, dihedral,
//!   quaternion and symmetric (n <= 4) specs.
//!
//! Dimensions are recovered by integer rounding and revalidated, so
//! downstream exact counting consumes only integer data.

use std::sync::Arc;

use nalgebra::{Complex, DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ClassFunction, FiniteGroup, GroupError, GroupOrigin};

const ORTHOGONALITY_TOL: f64 = 1e-9;
const ROUNDING_TOL: f64 = 1e-6;
const RETRY_BUDGET: usize = 8;

/// The irreducible characters of a group, one per conjugacy class.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    characters: Vec<ClassFunction>,
    dimensions: Vec<u64>,
}

impl CharacterTable {
    /// Preferred constructor: the exact built-in table when the group's
    /// spec is recognized, the numerical path otherwise.
    pub fn for_group(group: &Arc<FiniteGroup>) -> Result<CharacterTable, GroupError> {
        match Self::builtin(group) {
            Some(table) => Ok(table),
            None => Self::numerical(group),
        }
    }

    /// Closed-form table for recognized specs, `None` otherwise.
    pub fn builtin(group: &Arc<FiniteGroup>) -> Option<CharacterTable> {
        let funcs: Vec<Box<dyn Fn(usize) -> Complex64>> = match *group.origin() {
            GroupOrigin::Cyclic(n) => cyclic_characters(n),
            GroupOrigin::Dihedral(n) => dihedral_characters(n),
            GroupOrigin::Quaternion => quaternion_characters(),
            GroupOrigin::Symmetric(n) if n <= 4 => symmetric_characters(group, n),
            _ => return None,
        };
        let classes = group.classes();
        let mut characters = Vec::with_capacity(funcs.len());
        for f in &funcs {
            let values: Vec<Complex64> = (0..classes.count())
                .map(|c| f(classes.representative(c)))
                .collect();
            characters.push(ClassFunction::from_class_values(group.clone(), values).ok()?);
        }
        Self::assemble(group.clone(), characters).ok()
    }

    /// Burnside-style numerical table from class-sum multiplication
    /// matrices. Deterministic: retries reseed from a fixed sequence.
    pub fn numerical(group: &Arc<FiniteGroup>) -> Result<CharacterTable, GroupError> {
        let mut last = String::new();
        for attempt in 0..RETRY_BUDGET {
            match numerical_attempt(group, 0x5eed_c0de + attempt as u64) {
                Ok(table) => return Ok(table),
                Err(e) => last = e,
            }
        }
        Err(GroupError::CharacterTableFailure(format!(
            "degeneracy splitting failed after {RETRY_BUDGET} attempts: {last}"
        )))
    }

    fn assemble(
        group: Arc<FiniteGroup>,
        mut characters: Vec<ClassFunction>,
    ) -> Result<CharacterTable, GroupError> {
        // Canonical order: by dimension, then lexicographically by rounded
        // class values, so output is reproducible across paths and runs.
        let key = |f: &ClassFunction| -> Vec<(i64, i64, i64)> {
            f.class_values()
                .iter()
                .map(|v| {
                    (
                        (v.re * 1e6).round() as i64,
                        (v.im * 1e6).round() as i64,
                        0,
                    )
                })
                .collect()
        };
        characters.sort_by(|a, b| {
            let da = (a.at_identity().re * 1e6).round() as i64;
            let db = (b.at_identity().re * 1e6).round() as i64;
            da.cmp(&db).then_with(|| key(a).cmp(&key(b)))
        });
        let mut dimensions = Vec::with_capacity(characters.len());
        for f in &characters {
            let d = f.at_identity();
            let rounded = d.re.round();
            if (d.re - rounded).abs() > ROUNDING_TOL || d.im.abs() > ROUNDING_TOL || rounded < 1.0 {
                return Err(GroupError::CharacterTableFailure(format!(
                    "dimension {d} does not round to a positive integer"
                )));
            }
            dimensions.push(rounded as u64);
        }
        let table = CharacterTable {
            group,
            characters,
            dimensions,
        };
        table.validate()?;
        Ok(table)
    }

    /// Check the orthogonality relations and integer constraints.
    pub fn validate(&self) -> Result<(), GroupError> {
        let k = self.group.classes().count();
        if self.characters.len() != k {
            return Err(GroupError::CharacterTableFailure(format!(
                "{} characters for {k} classes",
                self.characters.len()
            )));
        }
        let order = self.group.order() as u64;
        let dim_sq: u64 = self.dimensions.iter().map(|d| d * d).sum();
        if dim_sq != order {
            return Err(GroupError::CharacterTableFailure(format!(
                "sum of squared dimensions {dim_sq} != |G| = {order}"
            )));
        }
        for &d in &self.dimensions {
            if order % d != 0 {
                return Err(GroupError::CharacterTableFailure(format!(
                    "dimension {d} does not divide |G| = {order}"
                )));
            }
        }
        // First orthogonality: <chi_l, chi_m> = delta.
        for (l, a) in self.characters.iter().enumerate() {
            for (m, b) in self.characters.iter().enumerate() {
                let ip = a.inner_product(b)?;
                let expected = if l == m { 1.0 } else { 0.0 };
                if (ip - Complex64::new(expected, 0.0)).norm() > ORTHOGONALITY_TOL {
                    return Err(GroupError::CharacterTableFailure(format!(
                        "row orthogonality violated at ({l}, {m}): {ip}"
                    )));
                }
            }
        }
        // Second orthogonality: sum_l chi_l(C_i) chi_l(C_j^-1) =
        // delta_ij |G| / |C_i|.
        let classes = self.group.classes();
        for i in 0..k {
            for j in 0..k {
                let j_inv = classes.inverse_class(j);
                let mut sum = Complex64::new(0.0, 0.0);
                for f in &self.characters {
                    sum += f.class_values()[i] * f.class_values()[j_inv];
                }
                let expected = if i == j {
                    self.group.order() as f64 / classes.size(i) as f64
                } else {
                    0.0
                };
                if (sum - Complex64::new(expected, 0.0)).norm() > ORTHOGONALITY_TOL {
                    return Err(GroupError::CharacterTableFailure(format!(
                        "column orthogonality violated at ({i}, {j}): {sum}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Irreducible characters in canonical order.
    pub fn characters(&self) -> &[ClassFunction] {
        &self.characters
    }

    /// Integer dimensions (values at the identity class).
    pub fn dimensions(&self) -> &[u64] {
        &self.dimensions
    }

    /// Coefficients m_l with chi = sum_l m_l chi_l, via the class-function
    /// inner product.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<Complex64>, GroupError> {
        if !self.group.same_group(chi.group()) {
            return Err(GroupError::GroupMismatch);
        }
        self.characters.iter().map(|f| chi.inner_product(f)).collect()
    }

    /// Reconstruct sum_l m_l chi_l as a class function.
    pub fn reconstruct(&self, coefficients: &[Complex64]) -> ClassFunction {
        let k = self.group.classes().count();
        let mut values = vec![Complex64::new(0.0, 0.0); k];
        for (m, f) in coefficients.iter().zip(&self.characters) {
            for (v, x) in values.iter_mut().zip(f.class_values()) {
                *v += m * x;
            }
        }
        ClassFunction::from_class_values(self.group.clone(), values)
            .expect("coefficient count matches table")
    }

    /// Match each of this table's characters to one of `other`'s within
    /// `tol`, bijectively. Used to compare the numerical and built-in paths.
    pub fn matches(&self, other: &CharacterTable, tol: f64) -> bool {
        if self.characters.len() != other.characters.len() {
            return false;
        }
        let mut used = vec![false; other.characters.len()];
        'outer: for a in &self.characters {
            for (j, b) in other.characters.iter().enumerate() {
                if used[j] {
                    continue;
                }
                let close = a
                    .class_values()
                    .iter()
                    .zip(b.class_values())
                    .all(|(x, y)| (x - y).norm() <= tol);
                if close {
                    used[j] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }
}

/// Free-function alias for [`CharacterTable::for_group`].
pub fn character_table(group: &Arc<FiniteGroup>) -> Result<CharacterTable, GroupError> {
    CharacterTable::for_group(group)
}

// ---------------------------------------------------------------------------
// Numerical path
// ---------------------------------------------------------------------------

/// Class-sum structure constants: `a[i][l * k + j]` is the number of pairs
/// (x, y) in C_i x C_j with x y = z for a fixed z in C_l.
fn class_sum_matrices(group: &FiniteGroup) -> Vec<Vec<f64>> {
    let classes = group.classes();
    let k = classes.count();
    let mut mats = vec![vec![0.0; k * k]; k];
    for l in 0..k {
        let z = classes.representative(l);
        for x in 0..group.order() {
            let y = group.mul(group.inv(x), z);
            let i = classes.class_of(x);
            let j = classes.class_of(y);
            mats[i][l * k + j] += 1.0;
        }
    }
    mats
}

fn numerical_attempt(group: &Arc<FiniteGroup>, seed: u64) -> Result<CharacterTable, String> {
    let classes = group.classes();
    let k = classes.count();
    let order = group.order() as f64;
    if k == 1 {
        let trivial = ClassFunction::trivial(group.clone());
        return CharacterTable::assemble(group.clone(), vec![trivial]).map_err(|e| e.to_string());
    }
    let mats = class_sum_matrices(group);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Random real combination of the commuting class-sum matrices; its
    // eigenvectors are generically the common eigenvectors.
    let coeffs: Vec<f64> = (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let mut combo = DMatrix::<f64>::zeros(k, k);
    for (c, m) in coeffs.iter().zip(&mats) {
        for l in 0..k {
            for j in 0..k {
                combo[(l, j)] += c * m[l * k + j];
            }
        }
    }

    let schur = nalgebra::linalg::Schur::try_new(combo.clone(), 1e-12, 100_000)
        .ok_or_else(|| "Schur iteration did not converge".to_string())?;
    let eigenvalues = schur.complex_eigenvalues();
    let scale = eigenvalues.iter().map(|e| e.norm()).fold(1.0, f64::max);
    for a in 0..k {
        for b in (a + 1)..k {
            if (eigenvalues[a] - eigenvalues[b]).norm() < 1e-7 * scale {
                return Err(format!(
                    "eigenvalues {a} and {b} too close; need a fresh combination"
                ));
            }
        }
    }

    let combo_c = combo.map(|x| Complex::new(x, 0.0));
    let mut characters = Vec::with_capacity(k);
    for e in 0..k {
        let v = inverse_iteration(&combo_c, eigenvalues[e], &mut rng)?;
        // Rayleigh-style eigenvalue of each class-sum matrix on v:
        // omega_i = (M_i v)[p] / v[p] at the largest component p.
        let p = (0..k)
            .max_by(|&a, &b| v[a].norm().partial_cmp(&v[b].norm()).unwrap())
            .unwrap();
        let omega: Vec<Complex64> = mats
            .iter()
            .map(|m| {
                let mut num = Complex64::new(0.0, 0.0);
                for j in 0..k {
                    num += m[p * k + j] * Complex64::new(v[j].re, v[j].im);
                }
                num / Complex64::new(v[p].re, v[p].im)
            })
            .collect();
        // omega_i = |C_i| chi(C_i) / chi(1); normalize via <chi, chi> = 1.
        let mut norm = Complex64::new(0.0, 0.0);
        for i in 0..k {
            let i_inv = classes.inverse_class(i);
            norm += omega[i] * omega[i_inv] / classes.size(i) as f64;
        }
        if norm.im.abs() > 1e-6 || norm.re <= 0.0 {
            return Err(format!("non-positive character norm {norm}"));
        }
        let dim = (order / norm.re).sqrt();
        let dim_round = dim.round();
        if (dim - dim_round).abs() > ROUNDING_TOL || dim_round < 1.0 {
            return Err(format!("dimension {dim} does not round to an integer"));
        }
        let values: Vec<Complex64> = (0..k)
            .map(|i| omega[i] * dim_round / classes.size(i) as f64)
            .collect();
        characters.push(
            ClassFunction::from_class_values(group.clone(), values).map_err(|e| e.to_string())?,
        );
    }
    CharacterTable::assemble(group.clone(), characters).map_err(|e| e.to_string())
}

/// Inverse iteration for the eigenvector of `m` at (approximate)
/// eigenvalue `lambda`.
fn inverse_iteration(
    m: &DMatrix<Complex<f64>>,
    lambda: Complex<f64>,
    rng: &mut ChaCha8Rng,
) -> Result<DVector<Complex<f64>>, String> {
    let k = m.nrows();
    let scale = m.iter().map(|x| x.norm()).fold(1.0, f64::max);
    let mut shift = lambda;
    for _ in 0..3 {
        let shifted = m - DMatrix::<Complex<f64>>::identity(k, k) * shift;
        let lu = shifted.lu();
        let mut v = DVector::<Complex<f64>>::from_fn(k, |_, _| {
            Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        v /= Complex::new(v.norm(), 0.0);
        let mut converged = false;
        for _ in 0..8 {
            let Some(w) = lu.solve(&v) else {
                break;
            };
            let norm = w.norm();
            if !norm.is_finite() || norm == 0.0 {
                break;
            }
            let w = w / Complex::new(norm, 0.0);
            let residual = (m * &w - &w * shift).norm();
            v = w;
            if residual < 1e-10 * scale {
                converged = true;
                break;
            }
        }
        if converged {
            return Ok(v);
        }
        // Exactly singular shift or slow convergence: nudge and retry.
        shift += Complex::new(1e-10 * scale, 1e-10 * scale);
    }
    Err(format!("inverse iteration failed at eigenvalue {lambda}"))
}

// ---------------------------------------------------------------------------
// Built-in tables as element functions
// ---------------------------------------------------------------------------

type CharFn = Box<dyn Fn(usize) -> Complex64>;

fn cyclic_characters(n: usize) -> Vec<CharFn> {
    (0..n)
        .map(|j| {
            let f: CharFn = Box::new(move |m: usize| {
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (j * m % n) as f64 / n as f64)
            });
            f
        })
        .collect()
}

/// Element encoding from the dihedral builder: index m < n is r^m,
/// index n + m is s r^m.
fn dihedral_characters(n: usize) -> Vec<CharFn> {
    let mut out: Vec<CharFn> = Vec::new();
    out.push(Box::new(|_| Complex64::new(1.0, 0.0)));
    out.push(Box::new(move |e| {
        Complex64::new(if e < n { 1.0 } else { -1.0 }, 0.0)
    }));
    if n % 2 == 0 {
        out.push(Box::new(move |e| {
            Complex64::new(if (e % n) % 2 == 0 { 1.0 } else { -1.0 }, 0.0)
        }));
        out.push(Box::new(move |e| {
            let sign = if (e % n) % 2 == 0 { 1.0 } else { -1.0 };
            Complex64::new(if e < n { sign } else { -sign }, 0.0)
        }));
    }
    let two_dim = if n % 2 == 0 { n / 2 - 1 } else { (n - 1) / 2 };
    for j in 1..=two_dim {
        out.push(Box::new(move |e| {
            if e < n {
                Complex64::new(2.0 * (2.0 * std::f64::consts::PI * (j * e) as f64 / n as f64).cos(), 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }));
    }
    out
}

/// Element encoding from the quaternion builder:
/// 1, -1, i, -i, j, -j, k, -k.
fn quaternion_characters() -> Vec<CharFn> {
    let linear = |keep: usize| -> CharFn {
        // keep = unit index (1 = i, 2 = j, 3 = k) whose +/- pair maps to +1
        Box::new(move |e| {
            let unit = e / 2;
            let v = if unit == 0 || unit == keep { 1.0 } else { -1.0 };
            Complex64::new(v, 0.0)
        })
    };
    vec![
        Box::new(|_| Complex64::new(1.0, 0.0)),
        linear(1),
        linear(2),
        linear(3),
        Box::new(|e| {
            Complex64::new(
                match e {
                    0 => 2.0,
                    1 => -2.0,
                    _ => 0.0,
                },
                0.0,
            )
        }),
    ]
}

/// Symmetric-group characters keyed by cycle type; for n <= 4 the pair
/// (element order, class size) identifies the cycle type.
fn symmetric_characters(group: &Arc<FiniteGroup>, n: usize) -> Vec<CharFn> {
    #[derive(Clone, Copy, PartialEq)]
    enum CycleType {
        Id,
        Transposition,
        ThreeCycle,
        DoubleTransposition,
        FourCycle,
    }
    let g = group.clone();
    let type_of = move |e: usize| -> CycleType {
        let ord = g.element_order(e);
        let size = g.classes().size(g.classes().class_of(e));
        match (ord, size) {
            (1, _) => CycleType::Id,
            (2, 3) if n == 4 => CycleType::DoubleTransposition,
            (2, _) => CycleType::Transposition,
            (3, _) => CycleType::ThreeCycle,
            (4, _) => CycleType::FourCycle,
            _ => unreachable!("S{n} has elements of order <= 4"),
        }
    };
    let table: Vec<(f64, f64, f64, f64, f64)> = match n {
        1 => vec![(1.0, 0.0, 0.0, 0.0, 0.0)],
        2 => vec![(1.0, 1.0, 0.0, 0.0, 0.0), (1.0, -1.0, 0.0, 0.0, 0.0)],
        3 => vec![
            // (id, transposition, 3-cycle, -, -)
            (1.0, 1.0, 1.0, 0.0, 0.0),
            (1.0, -1.0, 1.0, 0.0, 0.0),
            (2.0, 0.0, -1.0, 0.0, 0.0),
        ],
        4 => vec![
            // (id, transposition, 3-cycle, double transposition, 4-cycle)
            (1.0, 1.0, 1.0, 1.0, 1.0),
            (1.0, -1.0, 1.0, 1.0, -1.0),
            (2.0, 0.0, -1.0, 2.0, 0.0),
            (3.0, 1.0, 0.0, -1.0, -1.0),
            (3.0, -1.0, 0.0, -1.0, 1.0),
        ],
        _ => unreachable!("built-in symmetric tables stop at n = 4"),
    };
    table
        .into_iter()
        .map(|row| {
            let type_of = type_of.clone();
            let f: CharFn = Box::new(move |e| {
                let v = match type_of(e) {
                    CycleType::Id => row.0,
                    CycleType::Transposition => row.1,
                    CycleType::ThreeCycle => row.2,
                    CycleType::DoubleTransposition => row.3,
                    CycleType::FourCycle => row.4,
                };
                Complex64::new(v, 0.0)
            });
            f
        })
        .collect()
}
