//! Partitions, up-down tableaux and their content sequences.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::scalars::{ParamSet, Rational, Scalar};

/// Largest `n` accepted by default.
pub const DEFAULT_CAP: usize = 6;

/// A partition stored without trailing zeros; `[]` is the empty partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Addable boxes `(row, column)`, 1-based, ordered by row.
    pub fn addable(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (r, &len) in self.0.iter().enumerate() {
            if r == 0 || self.0[r - 1] > len {
                out.push((r as u32 + 1, len + 1));
            }
        }
        out.push((self.0.len() as u32 + 1, 1));
        out
    }

    /// Removable boxes `(row, column)`, 1-based, ordered by row.
    pub fn removable(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (r, &len) in self.0.iter().enumerate() {
            if r + 1 == self.0.len() || self.0[r + 1] < len {
                out.push((r as u32 + 1, len));
            }
        }
        out
    }

    fn with_added(&self, row: u32) -> Partition {
        let mut p = self.0.clone();
        let r = row as usize - 1;
        if r == p.len() {
            p.push(1);
        } else {
            p[r] += 1;
        }
        Partition(p)
    }

    fn with_removed(&self, row: u32) -> Partition {
        let mut p = self.0.clone();
        p[row as usize - 1] -= 1;
        while p.last() == Some(&0) {
            p.pop();
        }
        Partition(p)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=cols)
                .map(|c| self.0.iter().filter(|&&l| l >= c).count() as u32)
                .collect(),
        )
    }

    /// Text form `"2,1"`; the empty partition is `"0"`.
    pub fn encode(&self) -> String {
        if self.0.is_empty() {
            "0".to_string()
        } else {
            self.0
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {s:?}")));
        }
        Partition::new(parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.encode())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    Added,
    Removed,
}

/// One box added to or removed from the previous shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxStep {
    pub kind: StepKind,
    pub row: u32,
    pub col: u32,
}

impl BoxStep {
    /// `b - a` for the box `(a, b)`.
    pub fn diagonal(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn transpose(&self) -> BoxStep {
        BoxStep {
            kind: self.kind,
            row: self.col,
            col: self.row,
        }
    }

    pub fn encode(&self) -> String {
        let sign = match self.kind {
            StepKind::Added => '+',
            StepKind::Removed => '-',
        };
        format!("{sign}{},{}", self.row, self.col)
    }
}

/// A walk `(Λ_1, …, Λ_n)` in the up-down Young graph starting at one box.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpDownTableau {
    shapes: Vec<Partition>,
    steps: Vec<BoxStep>,
}

impl fmt::Debug for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.encode())
    }
}

impl fmt::Display for UpDownTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl UpDownTableau {
    /// Validates a shape sequence and recovers its steps.
    pub fn from_shapes(shapes: Vec<Partition>) -> Result<Self> {
        if shapes.is_empty() {
            return Err(Error::Invalid("empty tableau".into()));
        }
        let mut prev = Partition::empty();
        let mut steps = Vec::with_capacity(shapes.len());
        for shape in &shapes {
            let step = prev
                .addable()
                .into_iter()
                .map(|(row, col)| BoxStep {
                    kind: StepKind::Added,
                    row,
                    col,
                })
                .chain(prev.removable().into_iter().map(|(row, col)| BoxStep {
                    kind: StepKind::Removed,
                    row,
                    col,
                }))
                .find(|s| apply_step(&prev, s) == *shape)
                .ok_or_else(|| {
                    Error::Invalid(format!(
                        "{:?} does not differ from {:?} by one box",
                        shape, prev
                    ))
                })?;
            steps.push(step);
            prev = shape.clone();
        }
        Ok(UpDownTableau { shapes, steps })
    }

    pub fn len(&self) -> usize {
        self.shapes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shapes.is_empty()
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn steps(&self) -> &[BoxStep] {
        &self.steps
    }

    pub fn shape(&self) -> &Partition {
        self.shapes.last().unwrap()
    }

    /// The initial segment of length `k`.
    pub fn prefix(&self, k: usize) -> UpDownTableau {
        UpDownTableau {
            shapes: self.shapes[..k].to_vec(),
            steps: self.steps[..k].to_vec(),
        }
    }

    /// True when no box is ever removed.
    pub fn is_standard(&self) -> bool {
        self.steps.iter().all(|s| s.kind == StepKind::Added)
    }

    pub fn transpose(&self) -> UpDownTableau {
        UpDownTableau {
            shapes: self.shapes.iter().map(Partition::transpose).collect(),
            steps: self.steps.iter().map(BoxStep::transpose).collect(),
        }
    }

    /// Text form `"1;2;2,1"`.
    pub fn encode(&self) -> String {
        self.shapes
            .iter()
            .map(Partition::encode)
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn encode_steps(&self) -> String {
        self.steps
            .iter()
            .map(BoxStep::encode)
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse(s: &str) -> Result<Self> {
        let shapes = s
            .split(';')
            .map(Partition::parse)
            .collect::<Result<Vec<_>>>()?;
        Self::from_shapes(shapes)
    }
}

fn apply_step(p: &Partition, s: &BoxStep) -> Partition {
    match s.kind {
        StepKind::Added => p.with_added(s.row),
        StepKind::Removed => p.with_removed(s.row),
    }
}

/// Successor steps of a shape: added boxes first, then removed boxes, each
/// ordered by `(row, column)`.
fn successors(p: &Partition) -> Vec<BoxStep> {
    let mut out: Vec<BoxStep> = p
        .addable()
        .into_iter()
        .map(|(row, col)| BoxStep {
            kind: StepKind::Added,
            row,
            col,
        })
        .collect();
    out.extend(p.removable().into_iter().map(|(row, col)| BoxStep {
        kind: StepKind::Removed,
        row,
        col,
    }));
    out
}

/// All up-down tableaux of length `n`, depth first.
pub fn enumerate_tableaux(n: usize) -> Result<Vec<UpDownTableau>> {
    enumerate_tableaux_capped(n, DEFAULT_CAP)
}

pub fn enumerate_tableaux_capped(n: usize, cap: usize) -> Result<Vec<UpDownTableau>> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut shapes = Vec::with_capacity(n);
    let mut steps = Vec::with_capacity(n);
    walk(&Partition::empty(), n, &mut shapes, &mut steps, &mut out);
    Ok(out)
}

fn walk(
    current: &Partition,
    n: usize,
    shapes: &mut Vec<Partition>,
    steps: &mut Vec<BoxStep>,
    out: &mut Vec<UpDownTableau>,
) {
    if shapes.len() == n {
        out.push(UpDownTableau {
            shapes: shapes.clone(),
            steps: steps.clone(),
        });
        return;
    }
    for s in successors(current) {
        let next = apply_step(current, &s);
        shapes.push(next.clone());
        steps.push(s);
        walk(&next, n, shapes, steps, out);
        shapes.pop();
        steps.pop();
    }
}

/// Standard tableaux of size `n` (up-down tableaux without removals).
pub fn enumerate_standard(n: usize) -> Result<Vec<UpDownTableau>> {
    Ok(enumerate_tableaux(n)?
        .into_iter()
        .filter(UpDownTableau::is_standard)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContentFlavor {
    Quantum,
    Classical,
    TClassical,
}

/// Contents of the boxes of a tableau, step by step.
#[derive(Clone, Debug, PartialEq)]
pub struct ContentSequence {
    pub values: Vec<Rational>,
    pub flavor: ContentFlavor,
}

/// Quantum content of one step over any field containing `q` and `nu`:
/// `q^{2(b-a)}` for an added box, `nu^2 q^{2(a-b)}` for a removed one.
pub fn step_content<K: Scalar>(step: &BoxStep, q: &K, nu: &K) -> Result<K> {
    let d = step.diagonal();
    Ok(match step.kind {
        StepKind::Added => q.pow_i(2 * d)?,
        StepKind::Removed => nu.clone() * nu * &q.pow_i(-2 * d)?,
    })
}

pub fn quantum_contents_in<K: Scalar>(u: &UpDownTableau, q: &K, nu: &K) -> Result<Vec<K>> {
    u.steps.iter().map(|s| step_content(s, q, nu)).collect()
}

pub fn quantum_contents(u: &UpDownTableau, params: &ParamSet) -> ContentSequence {
    ContentSequence {
        values: quantum_contents_in(u, &params.q, &params.nu).expect("q, nu are nonzero"),
        flavor: ContentFlavor::Quantum,
    }
}

/// Classical contents `±((b-a) + (ω-1)/2)` or their transposed variant.
pub fn classical_contents(
    u: &UpDownTableau,
    omega: &Rational,
    flavor: ContentFlavor,
) -> Result<ContentSequence> {
    let half = (omega - Rational::one()) / Rational::from_integer(2.into());
    let values = u
        .steps
        .iter()
        .map(|s| {
            let d = Rational::from_integer(s.diagonal().into());
            match (flavor, s.kind) {
                (ContentFlavor::Classical, StepKind::Added) => Ok(d + &half),
                (ContentFlavor::Classical, StepKind::Removed) => Ok(-(d + &half)),
                (ContentFlavor::TClassical, StepKind::Added) => Ok(-d + &half),
                (ContentFlavor::TClassical, StepKind::Removed) => Ok(d - &half),
                (ContentFlavor::Quantum, _) => Err(Error::Invalid(
                    "use quantum_contents for the quantum flavor".into(),
                )),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ContentSequence { values, flavor })
}

/// Contents of all one-box extensions and removals of a shape (the spectrum of
/// the next Jucys–Murphy element on the corresponding idempotent).
pub fn extension_spectrum_in<K: Scalar>(p: &Partition, q: &K, nu: &K) -> Result<Vec<K>> {
    let out = successors(p)
        .iter()
        .map(|s| step_content(s, q, nu))
        .collect::<Result<Vec<_>>>()?;
    for i in 0..out.len() {
        for j in (i + 1)..out.len() {
            if (out[i].clone() - &out[j]).is_zero() {
                return Err(Error::NotGeneric(format!(
                    "coinciding contents in the spectrum of {p:?}"
                )));
            }
        }
    }
    Ok(out)
}

pub fn extension_spectrum(p: &Partition, params: &ParamSet) -> Result<Vec<Rational>> {
    extension_spectrum_in(p, &params.q, &params.nu)
}

/// `(2n-1)!!`.
pub fn double_factorial_odd(n: usize) -> usize {
    (1..=n).map(|k| 2 * k - 1).product()
}
