//! Structured results of axiom checks.

use std::fmt;

use serde::Serialize;

use crate::exact::{unflatten, Matrix, Scalar};

/// An exact element of a tensor space, kept sparse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Value {
    pub shape: Vec<usize>,
    /// `(multi-index, coefficient)` pairs with nonzero coefficients, in index order.
    pub terms: Vec<(Vec<usize>, Scalar)>,
}

impl Value {
    pub fn from_dense(coeffs: &[Scalar], shape: &[usize]) -> Value {
        debug_assert_eq!(coeffs.len(), shape.iter().product::<usize>());
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (unflatten(i, shape), c.clone()))
            .collect();
        Value { shape: shape.to_vec(), terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let basis: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
            match (basis.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{}", basis.join("⊗"))?,
                (false, false) => write!(f, "{c}*{}", basis.join("⊗"))?,
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub equation_id: String,
    pub indices: Vec<usize>,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    passed: bool,
    violations: &'a [Violation],
}

impl Serialize for Report {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ReportJson { passed: self.passed(), violations: &self.violations }.serialize(s)
    }
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Violations with the given equation id.
    pub fn with_id<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.equation_id == id)
    }

    pub fn fails(&self, id: &str) -> bool {
        self.with_id(id).next().is_some()
    }

    pub fn ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.violations.iter().map(|v| v.equation_id.as_str()).collect();
        ids.dedup();
        ids
    }

    pub fn merge(&mut self, other: Report) {
        self.violations.extend(other.violations);
        self.sort();
    }

    pub fn sort(&mut self) {
        self.violations
            .sort_by(|a, b| (&a.equation_id, &a.indices).cmp(&(&b.equation_id, &b.indices)));
    }

    pub fn push(&mut self, equation_id: &str, indices: Vec<usize>, lhs: Value, rhs: Value) {
        self.violations.push(Violation { equation_id: equation_id.to_string(), indices, lhs, rhs });
    }

    /// Compares two linear maps with the same source and target column by column.
    /// A mismatch on basis input `j` is recorded with `indices = unflatten(j, input)`.
    pub fn compare(
        &mut self,
        equation_id: &str,
        lhs: &Matrix,
        rhs: &Matrix,
        input: &[usize],
        output: &[usize],
    ) {
        assert_eq!((lhs.rows(), lhs.cols()), (rhs.rows(), rhs.cols()), "{equation_id}: shape");
        debug_assert_eq!(lhs.cols(), input.iter().product::<usize>());
        debug_assert_eq!(lhs.rows(), output.iter().product::<usize>());
        for j in 0..lhs.cols() {
            let l = lhs.column(j);
            let r = rhs.column(j);
            if l != r {
                self.push(
                    equation_id,
                    unflatten(j, input),
                    Value::from_dense(&l, output),
                    Value::from_dense(&r, output),
                );
            }
        }
        self.sort();
    }

    /// Compares two vectors; a mismatch is recorded with empty indices.
    pub fn compare_vectors(&mut self, equation_id: &str, lhs: &[Scalar], rhs: &[Scalar], shape: &[usize]) {
        if lhs != rhs {
            self.push(equation_id, vec![], Value::from_dense(lhs, shape), Value::from_dense(rhs, shape));
            self.sort();
        }
    }

    /// Every scalar mentioned in the report.
    pub fn scalars(&self) -> impl Iterator<Item = &Scalar> {
        self.violations
            .iter()
            .flat_map(|v| v.lhs.terms.iter().chain(&v.rhs.terms).map(|(_, c)| c))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "passed");
        }
        writeln!(f, "failed: {} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {} at {:?}: lhs = {}, rhs = {}", v.equation_id, v.indices, v.lhs, v.rhs)?;
        }
        Ok(())
    }
}
