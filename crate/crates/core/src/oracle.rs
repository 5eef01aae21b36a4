//! Independent recomputations and algebraic-law checkers.
//!
//! Nothing here calls the operation it checks: [`naive_maxmin`] transcribes
//! the max-min definition with its own loops over raw amplitude/phase pairs,
//! and [`complex_eval_cross_check`] evaluates cross terms with `cos`/`sin`
//! directly. The law checkers drive the lattice operations through
//! [`LatticeOps`] so a deliberately broken operation can be injected.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex_fuzzy::{ComplexFuzzyMatrix, ComplexFuzzyNumber};
use crate::error::{Error, Result};
use crate::identify::cross_product;
use crate::signal::SampleTermList;
use crate::soft_matrix::MagnitudeMatrix;

/// Definition-literal max-min composition.
pub fn naive_maxmin(a: &ComplexFuzzyMatrix, b: &ComplexFuzzyMatrix) -> Result<ComplexFuzzyMatrix> {
    let (m, n) = a.shape();
    let (n2, p) = b.shape();
    if n != n2 {
        return Err(Error::Shape {
            op: "naive max-min product",
            left_rows: m,
            left_cols: n,
            right_rows: n2,
            right_cols: p,
        });
    }
    let ea = a.entries();
    let eb = b.entries();
    let mut out = Vec::with_capacity(m * p);
    for i in 0..m {
        for j in 0..p {
            let mut amp = f64::NEG_INFINITY;
            let mut phase = f64::NEG_INFINITY;
            for k in 0..n {
                let x = ea[i * n + k];
                let y = eb[k * p + j];
                let min_amp = if x.amplitude() < y.amplitude() { x.amplitude() } else { y.amplitude() };
                let min_phase = if x.phase() < y.phase() { x.phase() } else { y.phase() };
                if min_amp > amp {
                    amp = min_amp;
                }
                if min_phase > phase {
                    phase = min_phase;
                }
            }
            out.push(ComplexFuzzyNumber::new(amp, phase)?);
        }
    }
    ComplexFuzzyMatrix::new(m, p, out)
}

/// Largest `||r·(cos θ + i sin θ)| − r|` over the cross terms of `s × t`.
pub fn complex_eval_cross_check(s: &SampleTermList, t: &SampleTermList) -> Result<f64> {
    let cp = cross_product(s, t)?;
    Ok(cp
        .terms
        .iter()
        .map(|term| {
            let r = term.amplitude();
            let theta = term.phase();
            let modulus = (r * theta.cos()).hypot(r * theta.sin());
            (modulus - r).abs()
        })
        .fold(0.0, f64::max))
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawFailure {
    pub inputs_digest: String,
    pub lhs: MagnitudeMatrix,
    pub rhs: MagnitudeMatrix,
    pub max_deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub law: &'static str,
    pub trials: usize,
    pub failures: Vec<LawFailure>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type BinaryOp<'a> = Box<dyn Fn(&MagnitudeMatrix, &MagnitudeMatrix) -> MagnitudeMatrix + 'a>;
type UnaryOp<'a> = Box<dyn Fn(&MagnitudeMatrix) -> MagnitudeMatrix + 'a>;

/// The union / intersection / complement triple the laws are checked against.
pub struct LatticeOps<'a> {
    pub union: BinaryOp<'a>,
    pub intersection: BinaryOp<'a>,
    pub complement: UnaryOp<'a>,
}

impl LatticeOps<'_> {
    pub fn standard() -> Self {
        LatticeOps {
            union: Box::new(|a, b| a.union(b).expect("operands share a shape")),
            intersection: Box::new(|a, b| a.intersection(b).expect("operands share a shape")),
            complement: Box::new(MagnitudeMatrix::complement),
        }
    }

    /// Standard ops with the complement replaced.
    pub fn with_complement<'b>(complement: impl Fn(&MagnitudeMatrix) -> MagnitudeMatrix + 'b) -> LatticeOps<'b> {
        LatticeOps {
            complement: Box::new(complement),
            ..LatticeOps::standard()
        }
    }
}

/// Random matrix with entries on the 0.05 grid `{0, 0.05, …, 1}`.
pub fn random_grid_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> MagnitudeMatrix {
    let entries = (0..rows * cols)
        .map(|_| rng.gen_range(0..=20u32) as f64 / 20.0)
        .collect();
    MagnitudeMatrix::new(rows, cols, entries).expect("grid values lie in [0, 1]")
}

fn digest(inputs: &[&MagnitudeMatrix]) -> String {
    let mut h = DefaultHasher::new();
    for m in inputs {
        m.shape().hash(&mut h);
        for v in m.entries() {
            v.to_bits().hash(&mut h);
        }
    }
    format!("{:016x}", h.finish())
}

fn max_deviation(a: &MagnitudeMatrix, b: &MagnitudeMatrix) -> f64 {
    a.entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

type LawFn = fn(&LatticeOps, &MagnitudeMatrix, &MagnitudeMatrix, &MagnitudeMatrix) -> (MagnitudeMatrix, MagnitudeMatrix);

const LAWS: [(&str, LawFn); 8] = [
    ("intersection commutative", |o, a, b, _| ((o.intersection)(a, b), (o.intersection)(b, a))),
    ("union commutative", |o, a, b, _| ((o.union)(a, b), (o.union)(b, a))),
    ("intersection associative", |o, a, b, c| {
        ((o.intersection)(&(o.intersection)(a, b), c), (o.intersection)(a, &(o.intersection)(b, c)))
    }),
    ("union associative", |o, a, b, c| {
        ((o.union)(&(o.union)(a, b), c), (o.union)(a, &(o.union)(b, c)))
    }),
    ("intersection distributes over union", |o, a, b, c| {
        (
            (o.intersection)(a, &(o.union)(b, c)),
            (o.union)(&(o.intersection)(a, b), &(o.intersection)(a, c)),
        )
    }),
    ("union distributes over intersection", |o, a, b, c| {
        (
            (o.union)(a, &(o.intersection)(b, c)),
            (o.intersection)(&(o.union)(a, b), &(o.union)(a, c)),
        )
    }),
    ("de morgan: complement of union", |o, a, b, _| {
        ((o.complement)(&(o.union)(a, b)), (o.intersection)(&(o.complement)(a), &(o.complement)(b)))
    }),
    ("de morgan: complement of intersection", |o, a, b, _| {
        ((o.complement)(&(o.intersection)(a, b)), (o.union)(&(o.complement)(a), &(o.complement)(b)))
    }),
];

/// Checks the eight union/intersection/complement laws with the standard operations.
pub fn check_proposition_laws(trials: usize, shape: (usize, usize), seed: u64) -> Vec<LawReport> {
    check_proposition_laws_with(trials, shape, seed, &LatticeOps::standard())
}

pub fn check_proposition_laws_with(
    trials: usize,
    shape: (usize, usize),
    seed: u64,
    ops: &LatticeOps,
) -> Vec<LawReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<_> = (0..trials)
        .map(|_| {
            (
                random_grid_matrix(&mut rng, shape.0, shape.1),
                random_grid_matrix(&mut rng, shape.0, shape.1),
                random_grid_matrix(&mut rng, shape.0, shape.1),
            )
        })
        .collect();
    check_laws_on(&triples, ops)
}

/// Checks the eight laws on the given `(A, B, C)` triples.
pub fn check_laws_on(
    triples: &[(MagnitudeMatrix, MagnitudeMatrix, MagnitudeMatrix)],
    ops: &LatticeOps,
) -> Vec<LawReport> {
    LAWS.iter()
        .map(|&(law, f)| {
            let failures = triples
                .iter()
                .filter_map(|(a, b, c)| {
                    let (lhs, rhs) = f(ops, a, b, c);
                    (lhs != rhs).then(|| LawFailure {
                        inputs_digest: digest(&[a, b, c]),
                        max_deviation: max_deviation(&lhs, &rhs),
                        lhs,
                        rhs,
                    })
                })
                .collect();
            LawReport {
                law,
                trials: triples.len(),
                failures,
            }
        })
        .collect()
}

/// Reflexivity, antisymmetry and transitivity of the submatrix relation.
pub fn check_submatrix_order(trials: usize, shape: (usize, usize), seed: u64) -> Vec<LawReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (m, n) = shape;
    let mut reflexive = Vec::new();
    let mut antisymmetric = Vec::new();
    let mut transitive = Vec::new();
    for _ in 0..trials {
        let a = random_grid_matrix(&mut rng, m, n);
        let r1 = random_grid_matrix(&mut rng, m, n);
        let r2 = random_grid_matrix(&mut rng, m, n);
        // B ⊇ A and C ⊇ B by construction, so the transitivity premise holds.
        let b = a.union(&r1).expect("same shape");
        let c = b.union(&r2).expect("same shape");

        if !a.is_submatrix(&a).expect("same shape") {
            reflexive.push(failure(&[&a], &a, &a));
        }
        for (x, y) in [(&a, &b), (&a, &r1), (&b, &a)] {
            let both = x.is_submatrix(y).expect("same shape") && y.is_submatrix(x).expect("same shape");
            if both && !x.equals(y).expect("same shape") {
                antisymmetric.push(failure(&[x, y], x, y));
            }
        }
        let premise = a.is_submatrix(&b).expect("same shape") && b.is_submatrix(&c).expect("same shape");
        if !premise || !a.is_submatrix(&c).expect("same shape") {
            transitive.push(failure(&[&a, &b, &c], &a, &c));
        }
    }
    [
        ("submatrix reflexive", reflexive),
        ("submatrix antisymmetric", antisymmetric),
        ("submatrix transitive", transitive),
    ]
    .into_iter()
    .map(|(law, failures)| LawReport { law, trials, failures })
    .collect()
}

fn failure(inputs: &[&MagnitudeMatrix], lhs: &MagnitudeMatrix, rhs: &MagnitudeMatrix) -> LawFailure {
    LawFailure {
        inputs_digest: digest(inputs),
        lhs: lhs.clone(),
        rhs: rhs.clone(),
        max_deviation: max_deviation(lhs, rhs),
    }
}

/// Complement `x ↦ (1.1 − x) mod 1`. Not order-reversing, so De Morgan breaks.
pub fn corrupted_complement(m: &MagnitudeMatrix) -> MagnitudeMatrix {
    m.map(|x| (1.1 - x).rem_euclid(1.0))
        .expect("rem_euclid stays in [0, 1)")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn naive_matches_on_zero() {
        let z = ComplexFuzzyMatrix::new(2, 2, vec![ComplexFuzzyNumber::ZERO; 4]).unwrap();
        let a = ComplexFuzzyMatrix::from_polar_rows(&[vec![(0.5, 1.0), (0.2, PI)], vec![(1.0, 0.0), (0.7, 2.0)]])
            .unwrap();
        let p = naive_maxmin(&z, &a).unwrap();
        assert!(p.entries().iter().all(|e| e.amplitude() == 0.0));
        assert!(naive_maxmin(&a, &ComplexFuzzyMatrix::from_polar_rows(&[vec![(0.1, 0.0)]]).unwrap()).is_err());
    }

    #[test]
    fn laws_trivially_hold_on_zero_triple() {
        let z = MagnitudeMatrix::zero(2, 2).unwrap();
        let reports = check_laws_on(&[(z.clone(), z.clone(), z)], &LatticeOps::standard());
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(LawReport::passed));
    }

    #[test]
    fn laws_are_deterministic_per_seed() {
        assert_eq!(check_proposition_laws(5, (3, 2), 9), check_proposition_laws(5, (3, 2), 9));
        let ops = LatticeOps::with_complement(corrupted_complement);
        let a = check_proposition_laws_with(20, (2, 2), 1, &ops);
        let b = check_proposition_laws_with(20, (2, 2), 1, &ops);
        assert_eq!(a, b);
    }

    #[test]
    fn corrupted_complement_stays_in_range() {
        let m = MagnitudeMatrix::from_rows(vec![vec![0.0, 0.05, 0.1, 0.5, 1.0]]).unwrap();
        let c = corrupted_complement(&m);
        assert!(c.entries().iter().all(|v| (0.0..1.0).contains(v)));
    }

    #[test]
    fn cross_check_of_zero_terms() {
        let s = SampleTermList::from_terms(0, 2, vec![ComplexFuzzyNumber::ZERO; 2]).unwrap();
        assert_eq!(complex_eval_cross_check(&s, &s).unwrap(), 0.0);
    }
}
