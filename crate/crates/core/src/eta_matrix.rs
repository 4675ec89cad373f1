//! Square obstruction matrices and the linear solves that yield block angles.
//!
//! Column `k` of either matrix is the obstruction vector of one generator
//! block, written in terms of the vectors `v_j = e_j - e_{j+1}` (and
//! `v_last = e_last`):
//!
//! * XOR blocks, Gray order: `sum_{j in F(S_k)} v_j` (generator angle -0.5 rad).
//! * Controlled blocks, dictionary order: `sum_{j in C(S_k)} v_j` (generator 1 rad).
//!
//! Entries are built directly from the flip and conditioned sets, so they are
//! exact integers in `{-1, 0, 1}`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::characters::{eta_len, EtaVector};
use crate::error::{Error, Result};
use crate::linalg::{LuFactors, Matrix};
use crate::subsets::{conditioned_set, dictionary_sequence, flip_set, gray_sequence, SubsetMask};

/// Which block family and subset order a matrix encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockOrder {
    /// XOR-controlled rotations, nonempty subsets in Gray order.
    XorGray,
    /// Multi-controlled rotations, nonempty subsets in dictionary order.
    LambdaDict,
}

#[derive(Clone, Debug)]
pub struct EtaMatrix {
    n: usize,
    order: BlockOrder,
    columns: Vec<SubsetMask>,
    entries: Matrix,
}

impl EtaMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn order(&self) -> BlockOrder {
        self.order
    }

    /// Subset generating each column.
    pub fn column_subsets(&self) -> &[SubsetMask] {
        &self.columns
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[(row, col)]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.entries.to_rows()
    }

    pub fn factor(&self) -> Result<EtaSolver> {
        Ok(EtaSolver {
            lu: self.entries.lu()?,
            matrix: self.entries.clone(),
        })
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(2..=crate::diagonal::MAX_QUBITS).contains(&n) {
        return Err(Error::Domain(format!(
            "obstruction matrices need 2..={} qubits, got {n}",
            crate::diagonal::MAX_QUBITS
        )));
    }
    Ok(())
}

/// Adds `sum_{j in states} v_j` into column `col`.
fn add_v_sum(m: &mut Matrix, col: usize, states: &[usize]) {
    let dim = m.rows();
    for &j in states {
        // v_j has +1 in row j and -1 in row j+1 (1-based); rows here are 0-based
        m[(j - 1, col)] += 1.0;
        if j < dim {
            m[(j, col)] -= 1.0;
        }
    }
}

fn build(n: usize, order: BlockOrder) -> Result<EtaMatrix> {
    check_n(n)?;
    let m = n - 1;
    let columns: Vec<SubsetMask> = match order {
        BlockOrder::XorGray => gray_sequence(m)?.into_iter().skip(1).collect(),
        BlockOrder::LambdaDict => dictionary_sequence(m)?,
    };
    let dim = eta_len(n);
    debug_assert_eq!(columns.len(), dim);
    let mut entries = Matrix::zeros(dim, dim);
    for (col, &s) in columns.iter().enumerate() {
        let states = match order {
            BlockOrder::XorGray => flip_set(s, m)?,
            BlockOrder::LambdaDict => conditioned_set(s, m)?,
        };
        add_v_sum(&mut entries, col, &states);
    }
    Ok(EtaMatrix {
        n,
        order,
        columns,
        entries,
    })
}

/// The XOR-block matrix, columns in Gray order without the empty set.
pub fn build_eta_xor(n: usize) -> Result<EtaMatrix> {
    build(n, BlockOrder::XorGray)
}

/// The controlled-block matrix, columns in dictionary order.
pub fn build_eta_lambda(n: usize) -> Result<EtaMatrix> {
    build(n, BlockOrder::LambdaDict)
}

/// A factored obstruction matrix; solves are checked against the residual bound.
#[derive(Clone, Debug)]
pub struct EtaSolver {
    matrix: Matrix,
    lu: LuFactors,
}

impl EtaSolver {
    pub fn dim(&self) -> usize {
        self.lu.dim()
    }

    /// Returns `x` with `M x = psi`, or an error if the residual exceeds `1e-10 * dim`.
    pub fn solve(&self, psi: &[f64]) -> Result<Vec<f64>> {
        let x = self.lu.solve(psi)?;
        let residual = self.matrix.residual(&x, psi);
        let bound = 1e-10 * self.dim() as f64;
        if residual > bound {
            return Err(Error::Residual { residual, bound });
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.lu.inverse()
    }
}

/// Solves `M x = psi` with a fresh factorization.
pub fn solve(m: &EtaMatrix, psi: &EtaVector) -> Result<Vec<f64>> {
    if psi.len() != m.dim() {
        return Err(Error::Dimension(format!(
            "obstruction vector has length {}, matrix has dimension {}",
            psi.len(),
            m.dim()
        )));
    }
    m.factor()?.solve(psi.values())
}

type SolverCache = RwLock<HashMap<(BlockOrder, usize), Arc<(EtaMatrix, EtaSolver)>>>;

/// Process-wide cache of factored matrices, keyed by order and qubit count.
pub(crate) fn cached(order: BlockOrder, n: usize) -> Result<Arc<(EtaMatrix, EtaSolver)>> {
    static CACHE: OnceLock<SolverCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache
        .read()
        .expect("solver cache poisoned")
        .get(&(order, n))
    {
        return Ok(Arc::clone(hit));
    }
    let matrix = build(n, order)?;
    let solver = matrix.factor()?;
    let entry = Arc::new((matrix, solver));
    cache
        .write()
        .expect("solver cache poisoned")
        .entry((order, n))
        .or_insert_with(|| Arc::clone(&entry));
    Ok(entry)
}
