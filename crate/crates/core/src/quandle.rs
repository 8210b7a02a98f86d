//! Finite quandles given by Cayley tables.
//!
//! Elements are the indices `0..n`. A table is accepted only when it is
//! idempotent and every right translation `S_j : i -> i*j` is a bijective
//! homomorphism of the operation. Validation is exhaustive (`O(n^3)`) and
//! happens at construction time.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One violated axiom instance found while validating a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    EntryOutOfRange {
        i: usize,
        j: usize,
        value: i64,
    },
    /// `i * i != i`
    IdempotencyViolation {
        i: usize,
    },
    /// Column `j` is not a permutation.
    NotBijective {
        j: usize,
    },
    /// `(i*l)*j != (i*j)*(l*j)`
    NotHomomorphism {
        i: usize,
        l: usize,
        j: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotSquare { row, len, expected } => {
                write!(f, "NotSquare: row {row} has {len} entries, expected {expected}")
            }
            Violation::EntryOutOfRange { i, j, value } => {
                write!(f, "EntryOutOfRange: entry ({i},{j}) = {value}")
            }
            Violation::IdempotencyViolation { i } => write!(f, "IdempotencyViolation({i})"),
            Violation::NotBijective { j } => write!(f, "NotBijective({j})"),
            Violation::NotHomomorphism { i, l, j } => write!(f, "NotHomomorphism({i},{l},{j})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("quandle order must be positive")]
    EmptyQuandle,
    #[error("invalid quandle table: {}", display_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("declared order {declared} does not match table size {actual}")]
    OrderMismatch { declared: usize, actual: usize },
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("invalid quandle selector {0:?}: expected dihedral:<n>, trivial:<n> or file:<path>")]
    BadSelector(String),
    #[error("cannot parse quandle document: {0}")]
    Parse(String),
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
}

fn display_violations(v: &[Violation]) -> String {
    const SHOWN: usize = 8;
    let mut s = v.iter().take(SHOWN).map(ToString::to_string).collect::<Vec<_>>().join("; ");
    if v.len() > SHOWN {
        s.push_str(&format!("; ... ({} violations in total)", v.len()));
    }
    s
}

/// A finite quandle on `0..n`. Immutable once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    order: usize,
    cayley: Vec<usize>,
    name: Option<String>,
}

/// Lists every violated axiom instance of `table`. Structural problems
/// (ragged rows, out-of-range entries) are reported alone since the
/// algebraic checks are meaningless without a well-formed table.
pub fn validate_table(table: &[Vec<i64>]) -> Vec<Violation> {
    let n = table.len();
    let mut out = Vec::new();
    for (row, r) in table.iter().enumerate() {
        if r.len() != n {
            out.push(Violation::NotSquare { row, len: r.len(), expected: n });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for (i, r) in table.iter().enumerate() {
        for (j, &value) in r.iter().enumerate() {
            if value < 0 || value as u64 >= n as u64 {
                out.push(Violation::EntryOutOfRange { i, j, value });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    let op = |i: usize, j: usize| table[i][j] as usize;
    for i in 0..n {
        if op(i, i) != i {
            out.push(Violation::IdempotencyViolation { i });
        }
    }
    for j in 0..n {
        let mut seen = vec![false; n];
        for i in 0..n {
            seen[op(i, j)] = true;
        }
        if seen.iter().any(|s| !s) {
            out.push(Violation::NotBijective { j });
        }
    }
    for j in 0..n {
        for i in 0..n {
            for l in 0..n {
                if op(op(i, l), j) != op(op(i, j), op(l, j)) {
                    out.push(Violation::NotHomomorphism { i, l, j });
                }
            }
        }
    }
    out
}

impl Quandle {
    /// The dihedral quandle `R_n`: `i * j = 2j - i (mod n)`.
    pub fn dihedral(n: usize) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::EmptyQuandle);
        }
        let cayley = (0..n).flat_map(|i| (0..n).map(move |j| (2 * j + n - i) % n)).collect();
        Ok(Quandle { order: n, cayley, name: Some(format!("R_{n}")) })
    }

    /// The trivial quandle: `i * j = i`.
    pub fn trivial(n: usize) -> Result<Self, QuandleError> {
        if n == 0 {
            return Err(QuandleError::EmptyQuandle);
        }
        let cayley = (0..n).flat_map(|i| std::iter::repeat_n(i, n)).collect();
        Ok(Quandle { order: n, cayley, name: Some(format!("T_{n}")) })
    }

    /// Validates `table` against all quandle axioms.
    pub fn from_table(table: &[Vec<i64>], name: Option<String>) -> Result<Self, QuandleError> {
        if table.is_empty() {
            return Err(QuandleError::EmptyQuandle);
        }
        let violations = validate_table(table);
        if !violations.is_empty() {
            return Err(QuandleError::Invalid(violations));
        }
        let cayley = table.iter().flatten().map(|&v| v as usize).collect();
        Ok(Quandle { order: table.len(), cayley, name })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Index of `i * j`. Panics if either index is out of range.
    #[inline]
    pub fn op(&self, i: usize, j: usize) -> usize {
        assert!(i < self.order && j < self.order, "element index out of range");
        self.cayley[i * self.order + j]
    }

    /// The right translation `S_j : i -> i * j` as an image vector.
    pub fn right_translation(&self, j: usize) -> Result<Vec<usize>, QuandleError> {
        if j >= self.order {
            return Err(QuandleError::IndexOutOfRange { index: j, order: self.order });
        }
        Ok((0..self.order).map(|i| self.op(i, j)).collect())
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.cayley.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn to_document(&self) -> QuandleDocument {
        QuandleDocument {
            name: self.name.clone(),
            order: self.order,
            table: self.cayley.chunks(self.order).map(|r| r.iter().map(|&v| v as i64).collect()).collect(),
        }
    }

    /// Parses a quandle document. TOML is used when `path_hint` ends in
    /// `.toml`, JSON otherwise.
    pub fn parse_document(text: &str, path_hint: Option<&Path>) -> Result<Self, QuandleError> {
        let is_toml = path_hint.and_then(Path::extension).is_some_and(|e| e == "toml");
        let doc: QuandleDocument = if is_toml {
            toml::from_str(text).map_err(|e| QuandleError::Parse(e.to_string()))?
        } else {
            serde_json::from_str(text).map_err(|e| QuandleError::Parse(e.to_string()))?
        };
        doc.into_quandle()
    }

    pub fn load(path: &Path) -> Result<Self, QuandleError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| QuandleError::Io { path: path.to_owned(), message: e.to_string() })?;
        Self::parse_document(&text, Some(path))
    }
}

impl fmt::Display for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => write!(f, "{name} (order {})", self.order),
            None => write!(f, "quandle of order {}", self.order),
        }
    }
}

/// On-disk form of a quandle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuandleDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub table: Vec<Vec<i64>>,
}

impl QuandleDocument {
    pub fn into_quandle(self) -> Result<Quandle, QuandleError> {
        if self.order != self.table.len() {
            return Err(QuandleError::OrderMismatch { declared: self.order, actual: self.table.len() });
        }
        Quandle::from_table(&self.table, self.name)
    }
}

/// Command-line quandle selector: `dihedral:<n>`, `trivial:<n>` or `file:<path>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuandleSelector {
    Dihedral(usize),
    Trivial(usize),
    File(PathBuf),
}

impl QuandleSelector {
    pub fn build(&self) -> Result<Quandle, QuandleError> {
        match self {
            QuandleSelector::Dihedral(n) => Quandle::dihedral(*n),
            QuandleSelector::Trivial(n) => Quandle::trivial(*n),
            QuandleSelector::File(p) => Quandle::load(p),
        }
    }
}

impl FromStr for QuandleSelector {
    type Err = QuandleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || QuandleError::BadSelector(s.to_string());
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        match kind {
            "dihedral" => Ok(QuandleSelector::Dihedral(arg.parse().map_err(|_| bad())?)),
            "trivial" => Ok(QuandleSelector::Trivial(arg.parse().map_err(|_| bad())?)),
            "file" if !arg.is_empty() => Ok(QuandleSelector::File(PathBuf::from(arg))),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for QuandleSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuandleSelector::Dihedral(n) => write!(f, "dihedral:{n}"),
            QuandleSelector::Trivial(n) => write!(f, "trivial:{n}"),
            QuandleSelector::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}
