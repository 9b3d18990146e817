//! The JSON model file format and dispatch of checks by structure kind.
//!
//! Scalars are strings (`"3"`, `"-1/2"`). Products, coproducts, `r`, `σ` and
//! (co)actions are sparse lists of `[indices..., "p/q"]`; maps are dense
//! row-major matrices whose column `j` is the image of `e_j`. Omitted maps
//! are the identity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::axioms;
use crate::error::{Error, Result};
use crate::exact::{BiForm, Comul, Elem2, Endo, Matrix, Mul, Scalar};
use crate::report::Report;
use crate::structures::*;

type Entry3 = (usize, usize, usize, String);
type Entry2 = (usize, usize, String);

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<Vec<String>>>,
}

/// Expected verification outcome, used by catalog self-tests.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub passed: bool,
    /// Exact violation index sets per equation id, when `passed` is false.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub violations: BTreeMap<String, Vec<Vec<usize>>>,
}

/// On-disk representation; see the module docs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comul: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<Entry2>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rota_baxter: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prec: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub succ: Option<Vec<Entry3>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<BlockFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_module: Option<BlockFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comodule: Option<BlockFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_comodule: Option<BlockFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Expectation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Module,
    Comodule,
    HopfModule,
    HopfBimodule,
    RotaBaxter,
    Dendriform,
    PreLie,
    PreLieCoalgebra,
    Augmented,
    Coaugmented,
}

impl Kind {
    pub const ALL: [Kind; 13] = [
        Kind::Algebra,
        Kind::Coalgebra,
        Kind::Bialgebra,
        Kind::Module,
        Kind::Comodule,
        Kind::HopfModule,
        Kind::HopfBimodule,
        Kind::RotaBaxter,
        Kind::Dendriform,
        Kind::PreLie,
        Kind::PreLieCoalgebra,
        Kind::Augmented,
        Kind::Coaugmented,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Coalgebra => "coalgebra",
            Kind::Bialgebra => "bialgebra",
            Kind::Module => "module",
            Kind::Comodule => "comodule",
            Kind::HopfModule => "hopf-module",
            Kind::HopfBimodule => "hopf-bimodule",
            Kind::RotaBaxter => "rota-baxter",
            Kind::Dendriform => "dendriform",
            Kind::PreLie => "prelie",
            Kind::PreLieCoalgebra => "prelie-coalgebra",
            Kind::Augmented => "augmented",
            Kind::Coaugmented => "coaugmented",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown kind {s:?}")))
    }
}

/// A module or comodule block with up to four carrier maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub dim: usize,
    /// Action `A ⊗ M -> M` (or `M ⊗ A -> M`), or coaction `M -> A ⊗ M` (or `M -> M ⊗ A`).
    pub tensor: Matrix,
    pub alpha: Option<Endo>,
    pub beta: Option<Endo>,
    pub psi: Option<Endo>,
    pub omega: Option<Endo>,
}

/// Parsed and index-checked model.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Model {
    pub name: Option<String>,
    pub kind: Option<Kind>,
    pub dim: usize,
    pub lambda: Option<Scalar>,
    pub mul: Option<Mul>,
    pub comul: Option<Comul>,
    pub alpha: Option<Endo>,
    pub beta: Option<Endo>,
    pub psi: Option<Endo>,
    pub omega: Option<Endo>,
    pub unit: Option<Vec<Scalar>>,
    pub counit: Option<Vec<Scalar>>,
    pub r: Option<Elem2>,
    pub sigma: Option<BiForm>,
    pub chi: Option<Vec<Scalar>>,
    pub zeta: Option<Vec<Scalar>>,
    pub rota_baxter: Option<Endo>,
    pub prec: Option<Mul>,
    pub succ: Option<Mul>,
    pub module: Option<Block>,
    pub right_module: Option<Block>,
    pub comodule: Option<Block>,
    pub right_comodule: Option<Block>,
    pub expect: Option<Expectation>,
}

fn scalar(s: &str, path: &str) -> Result<Scalar> {
    Scalar::parse(s).map_err(|_| Error::BadScalar(format!("{s:?} at {path}")))
}

fn bound(path: &str, index: usize, bound: usize) -> Result<()> {
    if index < bound {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { path: path.to_string(), index, bound })
    }
}

/// Reads sparse rank-3 entries into a `rows × cols` matrix through `place`.
fn sparse3(
    entries: &[Entry3],
    bounds: [usize; 3],
    field: &str,
    rows: usize,
    cols: usize,
    place: impl Fn(usize, usize, usize) -> (usize, usize),
) -> Result<Matrix> {
    let mut m = Matrix::zeros(rows, cols);
    let mut seen = BTreeSet::new();
    for (n, (i, j, k, v)) in entries.iter().enumerate() {
        let path = format!("{field}[{n}]");
        for (idx, b) in [*i, *j, *k].into_iter().zip(bounds) {
            bound(&path, idx, b)?;
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(Error::Parse { path, message: "duplicate entry".into() });
        }
        let (r, c) = place(*i, *j, *k);
        m.set(r, c, scalar(v, &path)?);
    }
    Ok(m)
}

fn sparse2(entries: &[Entry2], n: usize, field: &str) -> Result<Vec<Scalar>> {
    let mut out = vec![Scalar::zero(); n * n];
    let mut seen = BTreeSet::new();
    for (k, (i, j, v)) in entries.iter().enumerate() {
        let path = format!("{field}[{k}]");
        bound(&path, *i, n)?;
        bound(&path, *j, n)?;
        if !seen.insert((*i, *j)) {
            return Err(Error::Parse { path, message: "duplicate entry".into() });
        }
        out[i * n + j] = scalar(v, &path)?;
    }
    Ok(out)
}

fn dense(rows: &[Vec<String>], n: usize, field: &str) -> Result<Endo> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse { path: field.to_string(), message: format!("expected a {n}×{n} matrix") });
    }
    let mut m = Matrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m.set(i, j, scalar(v, &format!("{field}[{i}][{j}]"))?);
        }
    }
    Ok(m)
}

fn vector(v: &[String], n: usize, field: &str) -> Result<Vec<Scalar>> {
    if v.len() != n {
        return Err(Error::Parse { path: field.to_string(), message: format!("expected {n} entries") });
    }
    v.iter().enumerate().map(|(i, s)| scalar(s, &format!("{field}[{i}]"))).collect()
}

fn opt<T, U>(x: &Option<T>, f: impl FnOnce(&T) -> Result<U>) -> Result<Option<U>> {
    x.as_ref().map(f).transpose()
}

fn write_scalar(s: &Scalar) -> String {
    s.to_string()
}

fn write_dense(m: &Endo) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| write_scalar(m.get(i, j))).collect()).collect()
}

fn write_vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(write_scalar).collect()
}

/// Sparse rank-3 entries in index order, read back through `place`.
fn write_sparse3(bounds: [usize; 3], m: &Matrix, place: impl Fn(usize, usize, usize) -> (usize, usize)) -> Vec<Entry3> {
    let mut out = vec![];
    for i in 0..bounds[0] {
        for j in 0..bounds[1] {
            for k in 0..bounds[2] {
                let (r, c) = place(i, j, k);
                let v = m.get(r, c);
                if !v.is_zero() {
                    out.push((i, j, k, write_scalar(v)));
                }
            }
        }
    }
    out
}

fn write_sparse2(v: &[Scalar], n: usize) -> Vec<Entry2> {
    let mut out = vec![];
    for i in 0..n {
        for j in 0..n {
            if !v[i * n + j].is_zero() {
                out.push((i, j, write_scalar(&v[i * n + j])));
            }
        }
    }
    out
}

#[derive(Clone, Copy)]
enum BlockKind {
    Left,
    Right,
    Comodule,
    RightComodule,
}

/// Maps an entry `(x, y, z)` to its `(row, col)` in the block matrix.
type Position = Box<dyn Fn(usize, usize, usize) -> (usize, usize)>;

impl BlockKind {
    fn field(self) -> &'static str {
        match self {
            BlockKind::Left => "module",
            BlockKind::Right => "right_module",
            BlockKind::Comodule => "comodule",
            BlockKind::RightComodule => "right_comodule",
        }
    }

    /// Index bounds and matrix position of entry `(x, y, z)` for algebra dimension `n`, carrier `d`.
    fn layout(self, n: usize, d: usize) -> ([usize; 3], usize, usize, Position) {
        match self {
            // [i][p][q]: e_i ▷ f_p = Σ g f_q
            BlockKind::Left => ([n, d, d], d, n * d, Box::new(move |i, p, q| (q, i * d + p))),
            // [p][i][q]: f_p ◁ e_i = Σ g f_q
            BlockKind::Right => ([d, n, d], d, d * n, Box::new(move |p, i, q| (q, p * n + i))),
            // [p][i][q]: ρ(f_p) = Σ h e_i ⊗ f_q
            BlockKind::Comodule => ([d, n, d], n * d, d, Box::new(move |p, i, q| (i * d + q, p))),
            // [p][q][i]: φ(f_p) = Σ h f_q ⊗ e_i
            BlockKind::RightComodule => ([d, d, n], d * n, d, Box::new(move |p, q, i| (q * n + i, p))),
        }
    }
}

fn read_block(b: &BlockFile, n: usize, kind: BlockKind) -> Result<Block> {
    let field = kind.field();
    let d = b.dim;
    let (bounds, rows, cols, place) = kind.layout(n, d);
    let entries = match kind {
        BlockKind::Left | BlockKind::Right => b.action.as_ref(),
        _ => b.coaction.as_ref(),
    };
    let entries = entries.ok_or_else(|| Error::MissingField(format!("{field}.{}", if matches!(kind, BlockKind::Left | BlockKind::Right) { "action" } else { "coaction" })))?;
    let tensor = sparse3(entries, bounds, field, rows, cols, place)?;
    Ok(Block {
        dim: d,
        tensor,
        alpha: opt(&b.alpha, |m| dense(m, d, &format!("{field}.alpha")))?,
        beta: opt(&b.beta, |m| dense(m, d, &format!("{field}.beta")))?,
        psi: opt(&b.psi, |m| dense(m, d, &format!("{field}.psi")))?,
        omega: opt(&b.omega, |m| dense(m, d, &format!("{field}.omega")))?,
    })
}

fn write_block(b: &Block, n: usize, kind: BlockKind) -> BlockFile {
    let (bounds, _, _, place) = kind.layout(n, b.dim);
    let entries = Some(write_sparse3(bounds, &b.tensor, place));
    let (action, coaction) = match kind {
        BlockKind::Left | BlockKind::Right => (entries, None),
        _ => (None, entries),
    };
    BlockFile {
        dim: b.dim,
        action,
        coaction,
        alpha: b.alpha.as_ref().map(write_dense),
        beta: b.beta.as_ref().map(write_dense),
        psi: b.psi.as_ref().map(write_dense),
        omega: b.omega.as_ref().map(write_dense),
    }
}

fn mul_layout(n: usize) -> impl Fn(usize, usize, usize) -> (usize, usize) {
    move |i, j, k| (k, i * n + j)
}

fn comul_layout(n: usize) -> impl Fn(usize, usize, usize) -> (usize, usize) {
    move |i, j, k| (j * n + k, i)
}

impl Model {
    pub fn empty(dim: usize) -> Self {
        Model { dim, ..Model::default() }
    }

    pub fn parse(json: &str) -> Result<Model> {
        let file: ModelFile = serde_json::from_str(json).map_err(|e| Error::Parse {
            path: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        Model::from_file(&file)
    }

    pub fn from_file(f: &ModelFile) -> Result<Model> {
        let n = f.dim;
        let m3 = |e: &Vec<Entry3>, field: &str| sparse3(e, [n; 3], field, n, n * n, mul_layout(n));
        let module = |b: &Option<BlockFile>, k| opt(b, |b| read_block(b, n, k));
        Ok(Model {
            name: f.name.clone(),
            kind: opt(&f.kind, |k| k.parse())?,
            dim: n,
            lambda: opt(&f.lambda, |s| scalar(s, "lambda"))?,
            mul: opt(&f.mul, |e| Mul::from_matrix(m3(e, "mul")?))?,
            comul: opt(&f.comul, |e| Comul::from_matrix(sparse3(e, [n; 3], "comul", n * n, n, comul_layout(n))?))?,
            alpha: opt(&f.alpha, |m| dense(m, n, "alpha"))?,
            beta: opt(&f.beta, |m| dense(m, n, "beta"))?,
            psi: opt(&f.psi, |m| dense(m, n, "psi"))?,
            omega: opt(&f.omega, |m| dense(m, n, "omega"))?,
            unit: opt(&f.unit, |v| vector(v, n, "unit"))?,
            counit: opt(&f.counit, |v| vector(v, n, "counit"))?,
            r: opt(&f.r, |e| Ok(Elem2::from_coeffs(n, sparse2(e, n, "r")?)))?,
            sigma: opt(&f.sigma, |e| Ok(BiForm::from_elem2(&Elem2::from_coeffs(n, sparse2(e, n, "sigma")?))))?,
            chi: opt(&f.chi, |v| vector(v, n, "chi"))?,
            zeta: opt(&f.zeta, |v| vector(v, n, "zeta"))?,
            rota_baxter: opt(&f.rota_baxter, |m| dense(m, n, "rota_baxter"))?,
            prec: opt(&f.prec, |e| Mul::from_matrix(m3(e, "prec")?))?,
            succ: opt(&f.succ, |e| Mul::from_matrix(m3(e, "succ")?))?,
            module: module(&f.module, BlockKind::Left)?,
            right_module: module(&f.right_module, BlockKind::Right)?,
            comodule: module(&f.comodule, BlockKind::Comodule)?,
            right_comodule: module(&f.right_comodule, BlockKind::RightComodule)?,
            expect: f.expect.clone(),
        })
    }

    pub fn to_file(&self) -> ModelFile {
        let n = self.dim;
        ModelFile {
            name: self.name.clone(),
            kind: self.kind.map(|k| k.name().to_string()),
            dim: n,
            lambda: self.lambda.as_ref().map(write_scalar),
            mul: self.mul.as_ref().map(|m| write_sparse3([n; 3], m.matrix(), mul_layout(n))),
            comul: self.comul.as_ref().map(|m| write_sparse3([n; 3], m.matrix(), comul_layout(n))),
            alpha: self.alpha.as_ref().map(write_dense),
            beta: self.beta.as_ref().map(write_dense),
            psi: self.psi.as_ref().map(write_dense),
            omega: self.omega.as_ref().map(write_dense),
            unit: self.unit.as_deref().map(write_vector),
            counit: self.counit.as_deref().map(write_vector),
            r: self.r.as_ref().map(|r| write_sparse2(r.coeffs(), n)),
            sigma: self.sigma.as_ref().map(|s| write_sparse2(s.to_elem2().coeffs(), n)),
            chi: self.chi.as_deref().map(write_vector),
            zeta: self.zeta.as_deref().map(write_vector),
            rota_baxter: self.rota_baxter.as_ref().map(write_dense),
            prec: self.prec.as_ref().map(|m| write_sparse3([n; 3], m.matrix(), mul_layout(n))),
            succ: self.succ.as_ref().map(|m| write_sparse3([n; 3], m.matrix(), mul_layout(n))),
            module: self.module.as_ref().map(|b| write_block(b, n, BlockKind::Left)),
            right_module: self.right_module.as_ref().map(|b| write_block(b, n, BlockKind::Right)),
            comodule: self.comodule.as_ref().map(|b| write_block(b, n, BlockKind::Comodule)),
            right_comodule: self.right_comodule.as_ref().map(|b| write_block(b, n, BlockKind::RightComodule)),
            expect: self.expect.clone(),
        }
    }

    /// Pretty JSON with a trailing newline; identical models give identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("serializable");
        s.push('\n');
        s
    }

    fn map(&self, m: &Option<Endo>) -> Endo {
        m.clone().unwrap_or_else(|| Endo::identity(self.dim))
    }

    pub fn alpha(&self) -> Endo {
        self.map(&self.alpha)
    }

    pub fn beta(&self) -> Endo {
        self.map(&self.beta)
    }

    pub fn psi(&self) -> Endo {
        self.map(&self.psi)
    }

    pub fn omega(&self) -> Endo {
        self.map(&self.omega)
    }

    pub fn lambda(&self) -> Result<Scalar> {
        self.lambda.clone().ok_or(Error::MissingWeight)
    }

    pub fn algebra(&self) -> Result<Algebra> {
        let mul = self.mul.clone().ok_or_else(|| Error::MissingField("mul".into()))?;
        Ok(Algebra { mul, alpha: self.alpha(), beta: self.beta(), unit: self.unit.clone() })
    }

    pub fn coalgebra(&self) -> Result<Coalgebra> {
        let comul = self.comul.clone().ok_or_else(|| Error::MissingField("comul".into()))?;
        Ok(Coalgebra { comul, psi: self.psi(), omega: self.omega(), counit: self.counit.clone() })
    }

    pub fn bialgebra(&self) -> Result<Bialgebra> {
        Bialgebra::new(self.algebra()?, self.coalgebra()?, self.lambda()?)
    }

    pub fn r(&self) -> Result<Elem2> {
        self.r.clone().ok_or_else(|| Error::MissingField("r".into()))
    }

    pub fn sigma(&self) -> Result<BiForm> {
        self.sigma.clone().ok_or_else(|| Error::MissingField("sigma".into()))
    }

    fn block(&self, b: &Option<Block>, field: &str) -> Result<Block> {
        b.clone().ok_or_else(|| Error::MissingField(field.into()))
    }

    fn block_map(b: &Block, m: &Option<Endo>) -> Endo {
        m.clone().unwrap_or_else(|| Endo::identity(b.dim))
    }

    pub fn left_module(&self) -> Result<LeftModule> {
        let b = self.block(&self.module, "module")?;
        Ok(LeftModule { dim: b.dim, alpha: Self::block_map(&b, &b.alpha), beta: Self::block_map(&b, &b.beta), action: b.tensor })
    }

    pub fn left_comodule(&self) -> Result<LeftComodule> {
        let b = self.block(&self.comodule, "comodule")?;
        Ok(LeftComodule { dim: b.dim, psi: Self::block_map(&b, &b.psi), omega: Self::block_map(&b, &b.omega), coaction: b.tensor })
    }

    pub fn hopf_module(&self) -> Result<HopfModule> {
        Ok(HopfModule { bialgebra: self.bialgebra()?, module: self.left_module()?, comodule: self.left_comodule()? })
    }

    pub fn hopf_bimodule(&self) -> Result<HopfBimodule> {
        let left = self.left_module()?;
        let co = self.left_comodule()?;
        let right = self.block(&self.right_module, "right_module")?;
        let rco = self.block(&self.right_comodule, "right_comodule")?;
        Ok(HopfBimodule {
            bialgebra: self.bialgebra()?,
            bimodule: Bimodule { dim: left.dim, left: left.action, right: right.tensor, alpha: left.alpha, beta: left.beta },
            left_coaction: co.coaction,
            right_coaction: rco.tensor,
            psi: co.psi,
            omega: co.omega,
        })
    }

    pub fn rota_baxter(&self) -> Result<RotaBaxter> {
        let operator = self.rota_baxter.clone().ok_or_else(|| Error::MissingField("rota_baxter".into()))?;
        Ok(RotaBaxter { algebra: self.algebra()?, operator, lambda: self.lambda()? })
    }

    pub fn dendriform(&self) -> Result<Dendriform> {
        let prec = self.prec.clone().ok_or_else(|| Error::MissingField("prec".into()))?;
        let succ = self.succ.clone().ok_or_else(|| Error::MissingField("succ".into()))?;
        Ok(Dendriform { prec, succ, alpha: self.alpha(), beta: self.beta() })
    }

    pub fn prelie(&self) -> Result<PreLie> {
        let product = self.mul.clone().ok_or_else(|| Error::MissingField("mul".into()))?;
        Ok(PreLie { product, alpha: self.alpha(), beta: self.beta() })
    }

    pub fn prelie_coalgebra(&self) -> Result<PreLieCoalgebra> {
        let coproduct = self.comul.clone().ok_or_else(|| Error::MissingField("comul".into()))?;
        Ok(PreLieCoalgebra { coproduct, psi: self.psi(), omega: self.omega() })
    }

    pub fn augmented(&self) -> Result<Augmented> {
        let chi = self.chi.clone().ok_or_else(|| Error::MissingField("chi".into()))?;
        Ok(Augmented { algebra: self.algebra()?, chi, lambda: self.lambda()? })
    }

    pub fn coaugmented(&self) -> Result<Coaugmented> {
        let zeta = self.zeta.clone().ok_or_else(|| Error::MissingField("zeta".into()))?;
        Ok(Coaugmented { coalgebra: self.coalgebra()?, zeta, lambda: self.lambda()? })
    }

    /// The declared kind, or the richest kind the present fields support.
    pub fn infer_kind(&self) -> Result<Kind> {
        if let Some(k) = self.kind {
            return Ok(k);
        }
        let k = if self.module.is_some() && self.comodule.is_some() {
            if self.right_module.is_some() && self.right_comodule.is_some() {
                Kind::HopfBimodule
            } else {
                Kind::HopfModule
            }
        } else if self.prec.is_some() || self.succ.is_some() {
            Kind::Dendriform
        } else if self.rota_baxter.is_some() {
            Kind::RotaBaxter
        } else if self.chi.is_some() {
            Kind::Augmented
        } else if self.zeta.is_some() {
            Kind::Coaugmented
        } else if self.mul.is_some() && self.comul.is_some() {
            Kind::Bialgebra
        } else if self.module.is_some() {
            Kind::Module
        } else if self.comodule.is_some() {
            Kind::Comodule
        } else if self.mul.is_some() {
            Kind::Algebra
        } else if self.comul.is_some() {
            Kind::Coalgebra
        } else {
            return Err(Error::Invalid("cannot infer a structure kind from the fields present".into()));
        };
        Ok(k)
    }

    // Builders from structures.

    pub fn from_algebra(a: &Algebra) -> Model {
        let mut m = Model::empty(a.dim());
        m.kind = Some(Kind::Algebra);
        m.set_algebra(a);
        m
    }

    fn set_algebra(&mut self, a: &Algebra) {
        self.mul = Some(a.mul.clone());
        self.alpha = Some(a.alpha.clone());
        self.beta = Some(a.beta.clone());
        self.unit = a.unit.clone();
    }

    fn set_coalgebra(&mut self, c: &Coalgebra) {
        self.comul = Some(c.comul.clone());
        self.psi = Some(c.psi.clone());
        self.omega = Some(c.omega.clone());
        self.counit = c.counit.clone();
    }

    pub fn from_coalgebra(c: &Coalgebra) -> Model {
        let mut m = Model::empty(c.dim());
        m.kind = Some(Kind::Coalgebra);
        m.set_coalgebra(c);
        m
    }

    pub fn from_bialgebra(b: &Bialgebra) -> Model {
        let mut m = Model::empty(b.dim());
        m.kind = Some(Kind::Bialgebra);
        m.set_algebra(&b.algebra);
        m.set_coalgebra(&b.coalgebra);
        m.lambda = Some(b.lambda.clone());
        m
    }

    pub fn from_hopf_module(h: &HopfModule) -> Model {
        let mut m = Model::from_bialgebra(&h.bialgebra);
        m.kind = Some(Kind::HopfModule);
        let (md, c) = (&h.module, &h.comodule);
        m.module = Some(Block { dim: md.dim, tensor: md.action.clone(), alpha: Some(md.alpha.clone()), beta: Some(md.beta.clone()), psi: None, omega: None });
        m.comodule = Some(Block { dim: c.dim, tensor: c.coaction.clone(), alpha: None, beta: None, psi: Some(c.psi.clone()), omega: Some(c.omega.clone()) });
        m
    }

    pub fn from_hopf_bimodule(h: &HopfBimodule) -> Model {
        let mut m = Model::from_hopf_module(&h.left_hopf_module());
        m.kind = Some(Kind::HopfBimodule);
        let d = h.dim();
        m.right_module = Some(Block { dim: d, tensor: h.bimodule.right.clone(), alpha: None, beta: None, psi: None, omega: None });
        m.right_comodule = Some(Block { dim: d, tensor: h.right_coaction.clone(), alpha: None, beta: None, psi: None, omega: None });
        m
    }

    pub fn from_rota_baxter(rb: &RotaBaxter) -> Model {
        let mut m = Model::from_algebra(&rb.algebra);
        m.kind = Some(Kind::RotaBaxter);
        m.rota_baxter = Some(rb.operator.clone());
        m.lambda = Some(rb.lambda.clone());
        m
    }

    pub fn from_dendriform(d: &Dendriform) -> Model {
        let mut m = Model::empty(d.dim());
        m.kind = Some(Kind::Dendriform);
        m.prec = Some(d.prec.clone());
        m.succ = Some(d.succ.clone());
        m.alpha = Some(d.alpha.clone());
        m.beta = Some(d.beta.clone());
        m
    }

    pub fn from_prelie(p: &PreLie) -> Model {
        let mut m = Model::empty(p.product.dim());
        m.kind = Some(Kind::PreLie);
        m.mul = Some(p.product.clone());
        m.alpha = Some(p.alpha.clone());
        m.beta = Some(p.beta.clone());
        m
    }

    pub fn from_prelie_coalgebra(p: &PreLieCoalgebra) -> Model {
        let mut m = Model::empty(p.coproduct.dim());
        m.kind = Some(Kind::PreLieCoalgebra);
        m.comul = Some(p.coproduct.clone());
        m.psi = Some(p.psi.clone());
        m.omega = Some(p.omega.clone());
        m
    }

    pub fn from_augmented(a: &Augmented) -> Model {
        let mut m = Model::from_algebra(&a.algebra);
        m.kind = Some(Kind::Augmented);
        m.chi = Some(a.chi.clone());
        m.lambda = Some(a.lambda.clone());
        m
    }

    pub fn from_coaugmented(c: &Coaugmented) -> Model {
        let mut m = Model::from_coalgebra(&c.coalgebra);
        m.kind = Some(Kind::Coaugmented);
        m.zeta = Some(c.zeta.clone());
        m.lambda = Some(c.lambda.clone());
        m
    }

    pub fn with_name(mut self, name: &str) -> Model {
        self.name = Some(name.to_string());
        self
    }
}

/// Runs the checker for `kind` (inferred when `None`). `full_dendriform`
/// adds the twisted dendriform relations.
pub fn verify(model: &Model, kind: Option<Kind>, full_dendriform: bool) -> Result<(Kind, Report)> {
    let kind = match kind {
        Some(k) => k,
        None => model.infer_kind()?,
    };
    let report = match kind {
        Kind::Algebra => axioms::check_bihom_algebra(&model.algebra()?),
        Kind::Coalgebra => axioms::check_bihom_coalgebra(&model.coalgebra()?),
        Kind::Bialgebra => axioms::check_infbh_bialgebra(&model.bialgebra()?),
        Kind::Module => axioms::check_left_module(&model.algebra()?, &model.left_module()?),
        Kind::Comodule => axioms::check_left_comodule(&model.coalgebra()?, &model.left_comodule()?),
        Kind::HopfModule => axioms::check_hopf_module(&model.hopf_module()?),
        Kind::HopfBimodule => axioms::check_hopf_bimodule(&model.hopf_bimodule()?),
        Kind::RotaBaxter => {
            let rb = model.rota_baxter()?;
            let mut r = axioms::check_bihom_algebra(&rb.algebra);
            r.merge(axioms::check_rota_baxter(&rb));
            r
        }
        Kind::Dendriform => axioms::check_dendriform(&model.dendriform()?, full_dendriform),
        Kind::PreLie => axioms::check_prelie(&model.prelie()?),
        Kind::PreLieCoalgebra => axioms::check_prelie_coalgebra(&model.prelie_coalgebra()?),
        Kind::Augmented => {
            let a = model.augmented()?;
            let mut r = axioms::check_bihom_algebra(&a.algebra);
            r.merge(axioms::check_augmented(&a));
            r
        }
        Kind::Coaugmented => {
            let c = model.coaugmented()?;
            let mut r = axioms::check_bihom_coalgebra(&c.coalgebra);
            r.merge(axioms::check_coaugmented(&c));
            r
        }
    };
    Ok((kind, report))
}

/// Whether `report` matches `expect` exactly, including violation index sets.
pub fn matches_expectation(report: &Report, expect: &Expectation) -> bool {
    if report.passed() != expect.passed {
        return false;
    }
    if expect.passed || expect.violations.is_empty() {
        return true;
    }
    let mut got: BTreeMap<String, Vec<Vec<usize>>> = BTreeMap::new();
    for v in &report.violations {
        got.entry(v.equation_id.clone()).or_default().push(v.indices.clone());
    }
    let mut want = expect.violations.clone();
    for v in want.values_mut() {
        v.sort();
    }
    got == want
}
