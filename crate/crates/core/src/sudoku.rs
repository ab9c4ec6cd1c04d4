//! Sudoku data model: instances with clues, complete grids, parsing,
//! constraint checking and a brute-force enumerator that serves as the
//! reference solver for everything built on top of the graph reduction.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// A 1-based `(row, column)` cell coordinate.
pub type Cell = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SudokuError {
    #[error("order {0} is not a perfect square >= 4")]
    NotSquare(usize),
    #[error("cell ({0}, {1}) is outside the {2}x{2} grid")]
    CellOutOfRange(usize, usize, usize),
    #[error("value {value} at ({row}, {col}) is outside 1..={order}")]
    ValueOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("inconsistent clues: value {value} appears twice in {house}")]
    Inconsistent { value: usize, house: House },
    #[error("line format needs 16 or 81 characters, got {0}")]
    LineLength(usize),
    #[error("unexpected token {0:?}")]
    BadToken(String),
    #[error("expected {expected} cell tokens, found {found}")]
    TokenCount { expected: usize, found: usize },
    #[error("order mismatch: instance is {instance}, grid is {grid}")]
    OrderMismatch { instance: usize, grid: usize },
}

/// Input layout accepted by [`parse_sudoku`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PuzzleFormat {
    /// `N` on the first line, then `N` rows of `N` whitespace separated integers, `0` blank.
    Grid,
    /// `N²` characters on one line, `0` or `.` blank.
    Line,
}

/// One of the three kinds of Sudoku house, with its 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum House {
    Row(usize),
    Column(usize),
    Block(usize),
}

impl fmt::Display for House {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            House::Row(i) => write!(f, "row {i}"),
            House::Column(j) => write!(f, "column {j}"),
            House::Block(a) => write!(f, "block {a}"),
        }
    }
}

/// Integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

fn check_order(order: usize) -> Result<usize, SudokuError> {
    match exact_sqrt(order) {
        Some(b) if order >= 4 => Ok(b),
        _ => Err(SudokuError::NotSquare(order)),
    }
}

/// Block index of cell `(i, j)`; blocks are numbered row-major over the boxes.
pub fn block_of(i: usize, j: usize, order: usize) -> Result<usize, SudokuError> {
    let b = check_order(order)?;
    if !(1..=order).contains(&i) || !(1..=order).contains(&j) {
        return Err(SudokuError::CellOutOfRange(i, j, order));
    }
    Ok(block_index(i, j, b))
}

#[inline]
pub(crate) fn block_index(i: usize, j: usize, box_size: usize) -> usize {
    ((i - 1) / box_size) * box_size + (j - 1) / box_size + 1
}

/// Cells of block `a` in row-major order.
pub fn block_cells(a: usize, order: usize) -> Vec<Cell> {
    let b = exact_sqrt(order).expect("order must be a perfect square");
    let r0 = ((a - 1) / b) * b;
    let c0 = ((a - 1) % b) * b;
    let mut cells = Vec::with_capacity(order);
    for di in 1..=b {
        for dj in 1..=b {
            cells.push((r0 + di, c0 + dj));
        }
    }
    cells
}

/// A partially filled Sudoku of order `N` with consistent clues.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SudokuInstance {
    order: usize,
    box_size: usize,
    // row-major, 0 = blank
    cells: Vec<usize>,
}

impl SudokuInstance {
    pub fn blank(order: usize) -> Result<Self, SudokuError> {
        let box_size = check_order(order)?;
        Ok(SudokuInstance {
            order,
            box_size,
            cells: vec![0; order * order],
        })
    }

    /// Builds an instance from `((row, col), value)` clues, rejecting
    /// out-of-range entries and clues that clash in a house.
    pub fn new<I>(order: usize, clues: I) -> Result<Self, SudokuError>
    where
        I: IntoIterator<Item = (Cell, usize)>,
    {
        let mut inst = Self::blank(order)?;
        for ((i, j), k) in clues {
            inst.check_cell(i, j)?;
            if !(1..=order).contains(&k) {
                return Err(SudokuError::ValueOutOfRange {
                    row: i,
                    col: j,
                    value: k,
                    order,
                });
            }
            let idx = (i - 1) * order + (j - 1);
            if inst.cells[idx] != 0 && inst.cells[idx] != k {
                return Err(SudokuError::Inconsistent {
                    value: k,
                    house: House::Row(i),
                });
            }
            inst.cells[idx] = k;
        }
        inst.check_consistent()?;
        Ok(inst)
    }

    fn check_cell(&self, i: usize, j: usize) -> Result<(), SudokuError> {
        if (1..=self.order).contains(&i) && (1..=self.order).contains(&j) {
            Ok(())
        } else {
            Err(SudokuError::CellOutOfRange(i, j, self.order))
        }
    }

    fn check_consistent(&self) -> Result<(), SudokuError> {
        let n = self.order;
        let mut seen: BTreeMap<(House, usize), ()> = BTreeMap::new();
        for ((i, j), k) in self.clues() {
            let a = block_index(i, j, self.box_size);
            for house in [House::Row(i), House::Column(j), House::Block(a)] {
                if seen.insert((house, k), ()).is_some() {
                    return Err(SudokuError::Inconsistent { value: k, house });
                }
            }
        }
        debug_assert!(seen.len() <= 3 * n * n);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn box_size(&self) -> usize {
        self.box_size
    }

    pub fn clue(&self, i: usize, j: usize) -> Option<usize> {
        match self.cells[(i - 1) * self.order + (j - 1)] {
            0 => None,
            k => Some(k),
        }
    }

    /// Clues in row-major order.
    pub fn clues(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        let n = self.order;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(move |(idx, &k)| ((idx / n + 1, idx % n + 1), k))
    }

    pub fn clue_count(&self) -> usize {
        self.cells.iter().filter(|&&k| k != 0).count()
    }

    /// A copy with one more clue; fails when the clue clashes.
    pub fn with_clue(&self, cell: Cell, value: usize) -> Result<Self, SudokuError> {
        Self::new(
            self.order,
            self.clues().chain(std::iter::once((cell, value))),
        )
    }

    /// Line format rendering (`.` for blanks); only defined for N ≤ 9.
    pub fn to_line(&self) -> Option<String> {
        if self.order > 9 {
            return None;
        }
        Some(
            self.cells
                .iter()
                .map(|&k| {
                    if k == 0 {
                        '.'
                    } else {
                        char::from(b'0' + k as u8)
                    }
                })
                .collect(),
        )
    }

    /// Grid format rendering, `0` for blanks.
    pub fn to_grid_text(&self) -> String {
        render_rows(self.order, &self.cells)
    }
}

fn render_rows(order: usize, cells: &[usize]) -> String {
    let mut out = format!("{order}\n");
    for row in cells.chunks(order) {
        let line: Vec<String> = row.iter().map(|k| k.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// A completely filled grid. Not necessarily a valid Sudoku; see [`validate_grid`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grid {
    order: usize,
    cells: Vec<usize>,
}

impl Grid {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, SudokuError> {
        let order = rows.len();
        check_order(order)?;
        let mut cells = Vec::with_capacity(order * order);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(SudokuError::TokenCount {
                    expected: order,
                    found: row.len(),
                });
            }
            for (c, k) in row.into_iter().enumerate() {
                if !(1..=order).contains(&k) {
                    return Err(SudokuError::ValueOutOfRange {
                        row: r + 1,
                        col: c + 1,
                        value: k,
                        order,
                    });
                }
                cells.push(k);
            }
        }
        Ok(Grid { order, cells })
    }

    pub(crate) fn from_cells(order: usize, cells: Vec<usize>) -> Self {
        debug_assert_eq!(cells.len(), order * order);
        Grid { order, cells }
    }

    /// Parses the grid format with no blanks allowed. House constraints are
    /// not checked; use [`validate_grid`] for that.
    pub fn parse(text: &str) -> Result<Self, SudokuError> {
        let (order, entries) = grid_tokens(text, false)?;
        Ok(Grid {
            order,
            cells: entries.into_iter().map(|(_, k)| k).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[(i - 1) * self.order + (j - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.order)
    }

    /// Every cell as a clue.
    pub fn to_instance(&self) -> SudokuInstance {
        let box_size = exact_sqrt(self.order).unwrap();
        SudokuInstance {
            order: self.order,
            box_size,
            cells: self.cells.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        render_rows(self.order, &self.cells)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Parses a puzzle in either supported layout.
pub fn parse_sudoku(text: &str, format: PuzzleFormat) -> Result<SudokuInstance, SudokuError> {
    match format {
        PuzzleFormat::Grid => parse_tokens(text, true),
        PuzzleFormat::Line => parse_line(text),
    }
}

/// Order and nonblank `(cell, value)` entries of the grid format.
fn grid_tokens(text: &str, allow_blank: bool) -> Result<(usize, Vec<(Cell, usize)>), SudokuError> {
    let mut tokens = text.split_whitespace();
    let head = tokens
        .next()
        .ok_or_else(|| SudokuError::BadToken(String::new()))?;
    let order: usize = head
        .parse()
        .map_err(|_| SudokuError::BadToken(head.to_string()))?;
    check_order(order)?;
    let body: Vec<&str> = tokens.collect();
    if body.len() != order * order {
        return Err(SudokuError::TokenCount {
            expected: order * order,
            found: body.len(),
        });
    }
    let mut clues = Vec::new();
    for (idx, tok) in body.iter().enumerate() {
        let (i, j) = (idx / order + 1, idx % order + 1);
        let k: usize = tok
            .parse()
            .map_err(|_| SudokuError::BadToken(tok.to_string()))?;
        if k == 0 && allow_blank {
            continue;
        }
        if !(1..=order).contains(&k) {
            return Err(SudokuError::ValueOutOfRange {
                row: i,
                col: j,
                value: k,
                order,
            });
        }
        clues.push(((i, j), k));
    }
    Ok((order, clues))
}

fn parse_tokens(text: &str, allow_blank: bool) -> Result<SudokuInstance, SudokuError> {
    let (order, clues) = grid_tokens(text, allow_blank)?;
    SudokuInstance::new(order, clues)
}

fn parse_line(text: &str) -> Result<SudokuInstance, SudokuError> {
    let line = text.trim();
    let chars: Vec<char> = line.chars().collect();
    let order = match chars.len() {
        16 => 4,
        81 => 9,
        len => return Err(SudokuError::LineLength(len)),
    };
    let mut clues = Vec::new();
    for (idx, &ch) in chars.iter().enumerate() {
        let (i, j) = (idx / order + 1, idx % order + 1);
        match ch {
            '.' | '0' => {}
            '1'..='9' => {
                let k = ch as usize - '0' as usize;
                if k > order {
                    return Err(SudokuError::ValueOutOfRange {
                        row: i,
                        col: j,
                        value: k,
                        order,
                    });
                }
                clues.push(((i, j), k));
            }
            other => return Err(SudokuError::BadToken(other.to_string())),
        }
    }
    SudokuInstance::new(order, clues)
}

/// A broken constraint found by [`validate_grid`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// The house does not hold every value exactly once.
    House(House),
    /// The grid disagrees with a clue of the instance.
    Clue {
        cell: Cell,
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::House(h) => write!(f, "{h} does not hold every value once"),
            Violation::Clue {
                cell: (i, j),
                expected,
                found,
            } => {
                write!(f, "cell ({i},{j}) holds {found} but the clue is {expected}")
            }
        }
    }
}

/// Lists every broken house and every unmatched clue; empty means valid.
pub fn validate_grid(
    instance: &SudokuInstance,
    grid: &Grid,
) -> Result<Vec<Violation>, SudokuError> {
    if instance.order != grid.order {
        return Err(SudokuError::OrderMismatch {
            instance: instance.order,
            grid: grid.order,
        });
    }
    let n = grid.order;
    let b = instance.box_size;
    let full: u128 = if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    };
    let mut rows = vec![0u128; n + 1];
    let mut cols = vec![0u128; n + 1];
    let mut blocks = vec![0u128; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            let bit = 1u128 << (grid.get(i, j) - 1);
            rows[i] |= bit;
            cols[j] |= bit;
            blocks[block_index(i, j, b)] |= bit;
        }
    }
    let mut out = Vec::new();
    let houses = [
        (&rows, House::Row as fn(usize) -> House),
        (&cols, House::Column),
        (&blocks, House::Block),
    ];
    for (masks, house) in houses {
        for (idx, &mask) in masks.iter().enumerate().skip(1) {
            if mask != full {
                out.push(Violation::House(house(idx)));
            }
        }
    }
    for ((i, j), k) in instance.clues() {
        let found = grid.get(i, j);
        if found != k {
            out.push(Violation::Clue {
                cell: (i, j),
                expected: k,
                found,
            });
        }
    }
    Ok(out)
}

/// Whether `grid` is a solution of `instance`.
pub fn is_solution(instance: &SudokuInstance, grid: &Grid) -> bool {
    matches!(validate_grid(instance, grid), Ok(v) if v.is_empty())
}

struct Enumerator<'a> {
    n: usize,
    b: usize,
    cells: Vec<usize>,
    rows: Vec<u64>,
    cols: Vec<u64>,
    blocks: Vec<u64>,
    limit: usize,
    out: &'a mut Vec<Grid>,
}

impl Enumerator<'_> {
    fn candidates(&self, idx: usize) -> u64 {
        let (i, j) = (idx / self.n, idx % self.n);
        let a = (i / self.b) * self.b + j / self.b;
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        full & !(self.rows[i] | self.cols[j] | self.blocks[a])
    }

    fn set(&mut self, idx: usize, k: usize, on: bool) {
        let (i, j) = (idx / self.n, idx % self.n);
        let a = (i / self.b) * self.b + j / self.b;
        let bit = 1u64 << (k - 1);
        if on {
            self.rows[i] |= bit;
            self.cols[j] |= bit;
            self.blocks[a] |= bit;
            self.cells[idx] = k;
        } else {
            self.rows[i] &= !bit;
            self.cols[j] &= !bit;
            self.blocks[a] &= !bit;
            self.cells[idx] = 0;
        }
    }

    // Forward check: every blank cell sharing a house with `idx` keeps a candidate.
    fn peers_alive(&self, idx: usize) -> bool {
        let n = self.n;
        let (i, j) = (idx / n, idx % n);
        let (r0, c0) = ((i / self.b) * self.b, (j / self.b) * self.b);
        let row = (0..n).map(|c| i * n + c);
        let col = (0..n).map(|r| r * n + j);
        let bx = (0..n).map(|t| (r0 + t / self.b) * n + c0 + t % self.b);
        row.chain(col)
            .chain(bx)
            .all(|p| self.cells[p] != 0 || self.candidates(p) != 0)
    }

    fn run(&mut self, from: usize) {
        if self.out.len() >= self.limit {
            return;
        }
        let Some(idx) = (from..self.cells.len()).find(|&p| self.cells[p] == 0) else {
            self.out.push(Grid::from_cells(self.n, self.cells.clone()));
            return;
        };
        let mut cand = self.candidates(idx);
        while cand != 0 {
            let k = cand.trailing_zeros() as usize + 1;
            cand &= cand - 1;
            self.set(idx, k, true);
            if self.peers_alive(idx) {
                self.run(idx + 1);
            }
            self.set(idx, k, false);
            if self.out.len() >= self.limit {
                return;
            }
        }
    }
}

/// Depth-first enumeration of up to `limit` solutions. Cells are filled in
/// row-major order and values tried in ascending order, so the output
/// sequence is fully reproducible. Supports orders up to 64.
pub fn enumerate_solutions(instance: &SudokuInstance, limit: usize) -> Vec<Grid> {
    let n = instance.order;
    assert!(n <= 64, "enumeration supports orders up to 64");
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    let mut e = Enumerator {
        n,
        b: instance.box_size,
        cells: vec![0; n * n],
        rows: vec![0; n],
        cols: vec![0; n],
        blocks: vec![0; n],
        limit,
        out: &mut out,
    };
    for ((i, j), k) in instance.clues() {
        e.set((i - 1) * n + (j - 1), k, true);
    }
    let dead = (0..n * n).any(|p| e.cells[p] == 0 && e.candidates(p) == 0);
    if !dead {
        e.run(0);
    }
    out
}

/// Number of solutions, counting no further than `limit`.
pub fn count_solutions(instance: &SudokuInstance, limit: usize) -> usize {
    enumerate_solutions(instance, limit).len()
}

/// Exactly one solution.
pub fn is_well_formed(instance: &SudokuInstance) -> bool {
    count_solutions(instance, 2) == 1
}
