//! Partitions, Young diagrams, tableaux and multiindices — the combinatorics
//! underlying every basis and map in the crate.
//!
//! Boxes are addressed `(row, column)`, 1-based, English convention.  The
//! canonical tableau order compares column-reading words (columns left to
//! right, each read top to bottom) lexicographically; it fixes basis
//! orderings everywhere downstream.

use crate::error::{Error, Result};
use std::fmt;

// ---------------------------------------------------------------- Partition

/// An integer partition: a weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build from parts, validating weak decrease and positivity.
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::ParseError {
                    pos: 0,
                    msg: format!("parts not weakly decreasing: {parts:?}"),
                });
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ParseError { pos: 0, msg: "zero part in partition".into() });
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Partition {
        Partition { parts: vec![] }
    }

    /// The parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True iff there are no parts.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_i (1-based), reading 0 beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition λ′ with λ′_j = max{ i : λ_i ≥ j }.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// True iff the diagram fits inside a d × s rectangle.
    pub fn fits(&self, d: usize, s: usize) -> bool {
        self.len() <= d && self.part(1) <= s
    }

    /// The complement λ° in the d × s rectangle: λ°_i = s − λ_{d+1−i}.
    pub fn complement(&self, d: usize, s: usize) -> Result<Partition> {
        if !self.fits(d, s) {
            return Err(Error::DoesNotFitRectangle { d, s });
        }
        let mut parts: Vec<usize> = (1..=d).map(|i| s - self.part(d + 1 - i)).collect();
        parts.retain(|&p| p > 0);
        Ok(Partition { parts })
    }

    /// All boxes (i, j) of the diagram, in column-reading order
    /// (column by column, top to bottom).
    pub fn boxes_column_order(&self) -> Vec<(usize, usize)> {
        let conj = self.conjugate();
        let mut out = vec![];
        for j in 1..=self.part(1) {
            for i in 1..=conj.part(j) {
                out.push((i, j));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&strs.join(","))
    }
}

/// Parse a partition from a comma list such as `3,1,1`, accepting the power
/// shorthand `1^4` for repeated parts (so `3,1^4` means `(3,1,1,1,1)`).
pub fn parse_partition(s: &str) -> Result<Partition> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = vec![];
    for tok in t.split(',') {
        let tok = tok.trim();
        let (base, rep) = match tok.split_once('^') {
            Some((b, r)) => {
                let rep: usize = r.trim().parse().map_err(|_| Error::ParseError {
                    pos: 0,
                    msg: format!("bad repetition `{r}`"),
                })?;
                (b.trim(), rep)
            }
            None => (tok, 1),
        };
        let p: usize = base
            .parse()
            .map_err(|_| Error::ParseError { pos: 0, msg: format!("bad part `{base}`") })?;
        parts.extend(std::iter::repeat(p).take(rep));
    }
    Partition::new(parts)
}

// ------------------------------------------------------------------ Tableau

/// A filling of a Young diagram with positive integers, stored by rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

/// The three standardness predicates of a tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableauClass {
    /// Rows weakly increase left to right.
    pub row_semistandard: bool,
    /// Columns strictly increase top to bottom.
    pub column_standard: bool,
    /// Both of the above.
    pub semistandard: bool,
}

impl Tableau {
    /// Build from row lists; the shape is inferred and validated.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Tableau> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())?;
        if rows.iter().any(|r| r.iter().any(|&e| e == 0)) {
            return Err(Error::EntryOutOfRange { entry: 0, max: usize::MAX });
        }
        Ok(Tableau { shape, rows })
    }

    /// The shape.
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Entry at box (i, j), 1-based.
    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    /// The rows.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// The entries of column j, top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows.iter().filter_map(|r| r.get(j - 1).copied()).collect()
    }

    /// Largest entry (0 for the empty tableau).
    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// The column-reading word: columns left to right, each top to bottom.
    /// Lexicographic comparison of these words is the canonical tableau
    /// order.
    pub fn column_word(&self) -> Vec<usize> {
        self.shape
            .boxes_column_order()
            .into_iter()
            .map(|(i, j)| self.entry(i, j))
            .collect()
    }

    /// The standardness predicates.
    pub fn classify(&self) -> TableauClass {
        let row_semistandard = self
            .rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let column_standard = (1..=self.shape.part(1))
            .all(|j| self.column(j).windows(2).all(|w| w[0] < w[1]));
        TableauClass {
            row_semistandard,
            column_standard,
            semistandard: row_semistandard && column_standard,
        }
    }

    /// Replace the entry at (i, j), returning a new tableau.
    pub fn with_entry(&self, i: usize, j: usize, value: usize) -> Tableau {
        let mut rows = self.rows.clone();
        rows[i - 1][j - 1] = value;
        Tableau { shape: self.shape.clone(), rows }
    }

    /// Build a tableau of the given shape from its columns.
    pub fn from_columns(shape: &Partition, cols: &[Vec<usize>]) -> Tableau {
        let mut rows: Vec<Vec<usize>> =
            shape.parts().iter().map(|&len| vec![0; len]).collect();
        for (jm1, col) in cols.iter().enumerate() {
            for (im1, &e) in col.iter().enumerate() {
                rows[im1][jm1] = e;
            }
        }
        Tableau { shape: shape.clone(), rows }
    }

    /// Sort every column ascending.  Returns the sorted tableau, the product
    /// of the per-column sorting signs, and `ok = false` when some column
    /// repeats an entry (the sign is then meaningless and the associated
    /// polytabloid vanishes).
    pub fn column_sort(&self) -> (Tableau, i32, bool) {
        let mut sign = 1i32;
        let mut ok = true;
        let ncols = self.shape.part(1);
        let mut cols = vec![];
        for j in 1..=ncols {
            let mut col = self.column(j);
            // Count inversions to get the parity of the sorting permutation.
            let mut inv = 0usize;
            for a in 0..col.len() {
                for b in a + 1..col.len() {
                    if col[a] > col[b] {
                        inv += 1;
                    } else if col[a] == col[b] {
                        ok = false;
                    }
                }
            }
            if inv % 2 == 1 {
                sign = -sign;
            }
            col.sort_unstable();
            cols.push(col);
        }
        (Tableau::from_columns(&self.shape, &cols), sign, ok)
    }

    /// The complement tableau t° in the d × s rectangle: the entries of
    /// column j° of t° are {1..d} minus the entries of column s+1−j° of t.
    pub fn complement(&self, d: usize, s: usize) -> Result<Tableau> {
        if !self.classify().column_standard {
            return Err(Error::NotColumnStandard);
        }
        if !self.shape.fits(d, s) {
            return Err(Error::DoesNotFitRectangle { d, s });
        }
        if self.max_entry() > d {
            return Err(Error::EntryOutOfRange { entry: self.max_entry(), max: d });
        }
        let comp_shape = self.shape.complement(d, s)?;
        let ncols = comp_shape.part(1);
        let mut cols = vec![];
        for j in 1..=ncols {
            let source = self.column(s + 1 - j);
            let col: Vec<usize> = (1..=d).filter(|e| !source.contains(e)).collect();
            cols.push(col);
        }
        Ok(Tableau::from_columns(&comp_shape, &cols))
    }

    /// The surplus S(t) = Σ (t(i,j) − i) over all boxes.
    pub fn surplus(&self) -> i64 {
        let mut s = 0i64;
        for (im1, row) in self.rows.iter().enumerate() {
            for &e in row {
                s += e as i64 - (im1 as i64 + 1);
            }
        }
        s
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// Parse the tableau text format: rows separated by `/`, entries by spaces,
/// e.g. `1 2 2 / 3 3`.
pub fn parse_tableau(s: &str) -> Result<Tableau> {
    let mut rows = vec![];
    for row in s.split('/') {
        let entries: std::result::Result<Vec<usize>, _> =
            row.split_whitespace().map(|e| e.parse::<usize>()).collect();
        rows.push(entries.map_err(|_| Error::ParseError {
            pos: 0,
            msg: format!("bad tableau row `{row}`"),
        })?);
    }
    rows.retain(|r| !r.is_empty());
    Tableau::from_rows(rows)
}

/// The kind of tableau to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableauKind {
    /// Semistandard: rows weakly increase, columns strictly increase.
    Ssyt,
    /// Column standard only.
    Csyt,
}

/// All tableaux of shape λ with entries in {1..n} of the given kind, in the
/// canonical (column-word lexicographic) order.
pub fn enumerate_tableaux(shape: &Partition, n: usize, kind: TableauKind) -> Vec<Tableau> {
    // Column-standard fillings are independent choices of strictly
    // increasing columns; semistandardness is a row filter on top.
    let conj = shape.conjugate();
    let ncols = shape.part(1);
    let col_choices: Vec<Vec<Vec<usize>>> = (1..=ncols)
        .map(|j| subsets_sorted(n, conj.part(j)))
        .collect();
    let mut out = vec![];
    let mut current: Vec<Vec<usize>> = vec![];
    fn rec(
        shape: &Partition,
        col_choices: &[Vec<Vec<usize>>],
        current: &mut Vec<Vec<usize>>,
        kind: TableauKind,
        out: &mut Vec<Tableau>,
    ) {
        if current.len() == col_choices.len() {
            let t = Tableau::from_columns(shape, current);
            if kind == TableauKind::Csyt || t.classify().semistandard {
                out.push(t);
            }
            return;
        }
        let j = current.len();
        for col in &col_choices[j] {
            // Prune on the row condition for SSYT: every row entry must be
            // >= its left neighbour.
            if kind == TableauKind::Ssyt && j > 0 {
                let left = &current[j - 1];
                if col.iter().zip(left.iter()).any(|(c, l)| c < l) {
                    continue;
                }
            }
            current.push(col.clone());
            rec(shape, col_choices, current, kind, out);
            current.pop();
        }
    }
    rec(shape, &col_choices, &mut current, kind, &mut out);
    out.sort_by(|a, b| a.column_word().cmp(&b.column_word()));
    out
}

/// All strictly increasing h-element sequences from {1..n}.
fn subsets_sorted(n: usize, h: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(n: usize, h: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == h {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            rec(n, h, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, h, 1, &mut cur, &mut out);
    out
}

// ----------------------------------------------------------- permutations

/// All permutations of {0..n-1} with their signs, as (images, sign) pairs
/// where `perm[k]` is the image of position k.
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = vec![];
    let mut cur: Vec<usize> = vec![];
    let mut used = vec![false; n];
    fn rec(
        n: usize,
        cur: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<(Vec<usize>, i32)>,
    ) {
        if cur.len() == n {
            let mut inv = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if cur[a] > cur[b] {
                        inv += 1;
                    }
                }
            }
            out.push((cur.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

// ------------------------------------------------------------- multiindices

/// All distinct arrangements of the entries of `i`, in lexicographic order.
///
/// This enumerates the orbit of the place-permutation action without ever
/// listing S_m itself, so it stays cheap for long multiindices with few
/// distinct values.
pub fn multiset_arrangements<T: Clone + Ord>(i: &[T]) -> Vec<Vec<T>> {
    let mut sorted = i.to_vec();
    sorted.sort();
    let mut out = vec![sorted.clone()];
    // Standard next-permutation loop over the multiset.
    loop {
        let v = out.last().unwrap();
        let mut cur = v.clone();
        // Find the rightmost ascent.
        let Some(k) = (0..cur.len().saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1])
        else {
            break;
        };
        let l = (k + 1..cur.len()).rev().find(|&l| cur[l] > cur[k]).unwrap();
        cur.swap(k, l);
        cur[k + 1..].reverse();
        out.push(cur);
    }
    out
}

/// One permutation per right coset of the stabilizer of `i` in S_m, as image
/// lists: representative σ sends `i` to the arrangement `[i[σ[0]], ...]`.
/// The count is m!/|Stab i|.
pub fn stabilizer_coset_reps<T: Clone + Ord + PartialEq>(i: &[T]) -> Vec<Vec<usize>> {
    multiset_arrangements(i)
        .into_iter()
        .map(|arr| {
            // Greedy position matching: for each output slot pick the first
            // unused input position carrying the required value.
            let mut used = vec![false; i.len()];
            arr.iter()
                .map(|v| {
                    let pos = (0..i.len()).find(|&p| !used[p] && &i[p] == v).unwrap();
                    used[pos] = true;
                    pos
                })
                .collect()
        })
        .collect()
}
