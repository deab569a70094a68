//! The two-runner abacus.
//!
//! Walking the rim of a Young diagram from its southwest corner to its
//! northeast corner gives a sequence of spaces (right steps) and beads (up
//! steps). Laid out row by row in two columns, cell `i` goes to row `i / 2`
//! on runner `i % 2`. A bead with a space directly above it on the same
//! runner is a removable 2-hook; sliding it up removes the hook. Pushing every
//! bead to the top of its runner gives the 2-core, and the distances the beads
//! travelled give the 2-quotient.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AbacusError, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    Space,
    Bead,
}

impl Cell {
    pub fn is_bead(self) -> bool {
        self == Cell::Bead
    }

    pub fn flipped(self) -> Self {
        match self {
            Cell::Space => Cell::Bead,
            Cell::Bead => Cell::Space,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Cell::Space => '.',
            Cell::Bead => 'O',
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            '.' | '○' => Some(Cell::Space),
            'O' | '●' => Some(Cell::Bead),
            _ => None,
        }
    }
}

/// A rim walk, possibly padded with leading beads and trailing spaces.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BeadSequence {
    cells: Vec<Cell>,
}

impl BeadSequence {
    pub fn new(cells: Vec<Cell>) -> Self {
        Self { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Strips leading beads and trailing spaces.
    pub fn canonical(&self) -> Self {
        let start = self.cells.iter().position(|c| !c.is_bead()).unwrap_or(self.cells.len());
        let end = self.cells.iter().rposition(|c| c.is_bead()).map_or(0, |i| i + 1);
        let cells = if start < end { self.cells[start..end].to_vec() } else { Vec::new() };
        Self { cells }
    }

    pub fn is_canonical(&self) -> bool {
        self.cells.first() != Some(&Cell::Bead) && self.cells.last() != Some(&Cell::Space)
    }

    /// Reverses the sequence and swaps beads with spaces; this is the rim
    /// walk of the conjugate partition.
    pub fn reversed_complement(&self) -> Self {
        Self { cells: self.cells.iter().rev().map(|c| c.flipped()).collect() }
    }

    pub fn with_leading_bead(&self) -> Self {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.push(Cell::Bead);
        cells.extend_from_slice(&self.cells);
        Self { cells }
    }

    /// Each bead contributes a part equal to the number of spaces before it.
    pub fn partition(&self) -> Partition {
        let mut spaces = 0;
        let mut parts = Vec::new();
        for cell in &self.cells {
            match cell {
                Cell::Space => spaces += 1,
                Cell::Bead if spaces > 0 => parts.push(spaces),
                Cell::Bead => {}
            }
        }
        parts.reverse();
        Partition::from_parts_unchecked(parts)
    }
}

impl fmt::Display for BeadSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cells.iter().try_for_each(|c| write!(f, "{}", c.symbol()))
    }
}

impl FromStr for BeadSequence {
    type Err = AbacusError;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| {
                Cell::from_symbol(c).ok_or_else(|| AbacusError::MalformedInput(format!("{c:?} is not '.' or 'O'")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// The canonical rim walk of `lambda`.
pub fn to_bead_sequence(lambda: &Partition) -> BeadSequence {
    let parts = lambda.parts();
    let mut cells = Vec::with_capacity(lambda.largest_part() + parts.len());
    let mut below = 0;
    for &part in parts.iter().rev() {
        cells.extend(std::iter::repeat_n(Cell::Space, part - below));
        cells.push(Cell::Bead);
        below = part;
    }
    BeadSequence { cells }
}

pub fn from_bead_sequence(seq: &BeadSequence) -> Partition {
    seq.canonical().partition()
}

/// A cell position on the abacus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HookPosition {
    pub runner: usize,
    pub row: usize,
}

/// A two-runner abacus display.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AbacusDisplay {
    rows: Vec<[Cell; 2]>,
}

impl AbacusDisplay {
    /// Lays `seq` out row-major, padding an odd-length sequence with a space.
    pub fn from_sequence(seq: &BeadSequence) -> Self {
        let rows = seq.cells.chunks(2).map(|pair| [pair[0], pair.get(1).copied().unwrap_or(Cell::Space)]).collect();
        Self { rows }
    }

    pub fn from_rows(rows: Vec<[Cell; 2]>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[[Cell; 2]] {
        &self.rows
    }

    pub fn cell(&self, pos: HookPosition) -> Option<Cell> {
        self.rows.get(pos.row).and_then(|r| r.get(pos.runner)).copied()
    }

    pub fn to_sequence(&self) -> BeadSequence {
        BeadSequence { cells: self.rows.iter().flatten().copied().collect() }
    }

    pub fn partition(&self) -> Partition {
        from_bead_sequence(&self.to_sequence())
    }

    /// Rows holding a bead on `runner`, top to bottom.
    pub fn bead_rows(&self, runner: usize) -> Vec<usize> {
        self.rows.iter().enumerate().filter(|(_, r)| r[runner].is_bead()).map(|(i, _)| i).collect()
    }

    pub fn bead_counts(&self) -> [usize; 2] {
        [0, 1].map(|r| self.rows.iter().filter(|row| row[r].is_bead()).count())
    }

    /// Every bead slid to the top of its runner.
    pub fn pushed_up(&self) -> Self {
        let counts = self.bead_counts();
        let rows = (0..self.rows.len()).map(|i| counts.map(|c| if i < c { Cell::Bead } else { Cell::Space })).collect();
        Self { rows }
    }

    /// Positions of beads that have a space directly above them.
    pub fn removable_hooks(&self) -> Vec<HookPosition> {
        let mut out = Vec::new();
        for row in 1..self.rows.len() {
            for runner in 0..2 {
                if self.rows[row][runner].is_bead() && !self.rows[row - 1][runner].is_bead() {
                    out.push(HookPosition { runner, row });
                }
            }
        }
        out
    }

    /// Slides the bead at `pos` one row up, removing a 2-hook.
    pub fn remove_hook(&self, pos: HookPosition) -> Result<Self> {
        let invalid = AbacusError::InvalidHookPosition { runner: pos.runner, row: pos.row };
        if pos.runner > 1 || pos.row == 0 || pos.row >= self.rows.len() {
            return Err(invalid);
        }
        if !self.rows[pos.row][pos.runner].is_bead() || self.rows[pos.row - 1][pos.runner].is_bead() {
            return Err(invalid);
        }
        let mut rows = self.rows.clone();
        rows[pos.row][pos.runner] = Cell::Space;
        rows[pos.row - 1][pos.runner] = Cell::Bead;
        Ok(Self { rows })
    }

    /// How far each bead on `runner` sits below its pushed-up slot, as a
    /// partition (lowest bead gives the largest part).
    pub fn runner_displacements(&self, runner: usize) -> Partition {
        let parts = self.bead_rows(runner).into_iter().enumerate().map(|(slot, row)| row - slot).collect();
        Partition::from_unsorted(parts)
    }
}

impl fmt::Display for AbacusDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{} {}", row[0].symbol(), row[1].symbol())?;
        }
        Ok(())
    }
}

/// The display of `lambda` whose 2-core has at least as many beads on
/// runner 1 as on runner 0, prepending one bead when needed.
pub fn normalized_display(lambda: &Partition) -> AbacusDisplay {
    let seq = to_bead_sequence(lambda);
    let display = AbacusDisplay::from_sequence(&seq);
    let [first, second] = display.bead_counts();
    if first > second {
        AbacusDisplay::from_sequence(&seq.with_leading_bead())
    } else {
        display
    }
}

pub fn removable_hooks(display: &AbacusDisplay) -> Vec<HookPosition> {
    display.removable_hooks()
}

pub fn remove_hook(display: &AbacusDisplay, pos: HookPosition) -> Result<AbacusDisplay> {
    display.remove_hook(pos)
}

pub fn two_core(lambda: &Partition) -> Partition {
    normalized_display(lambda).pushed_up().partition()
}

/// A 2-core `(m, ..., 1)` together with a 2-quotient `(μ, ν)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub core_index: usize,
    pub mu: Partition,
    pub nu: Partition,
}

impl CoreQuotient {
    pub fn new(core_index: usize, mu: Partition, nu: Partition) -> Self {
        Self { core_index, mu, nu }
    }

    pub fn core(&self) -> Partition {
        Partition::staircase(self.core_index)
    }

    /// Size of the partition this pair encodes.
    pub fn size(&self) -> usize {
        self.core_index * (self.core_index + 1) / 2 + 2 * (self.mu.size() + self.nu.size())
    }

    pub fn has_empty_quotient(&self) -> bool {
        self.mu.is_empty() && self.nu.is_empty()
    }
}

impl fmt::Display for CoreQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "core ({}) index {}, quotient (({}),({}))", self.core(), self.core_index, self.mu, self.nu)
    }
}

pub fn two_quotient(lambda: &Partition) -> CoreQuotient {
    let display = normalized_display(lambda);
    let core = display.pushed_up().partition();
    let core_index = core.len();
    debug_assert_eq!(core.staircase_index(), Some(core_index));
    CoreQuotient { core_index, mu: display.runner_displacements(0), nu: display.runner_displacements(1) }
}

/// Inverse of [`two_quotient`].
pub fn combine(cq: &CoreQuotient) -> Partition {
    // Runner 0 needs at least |μ| parts worth of beads, runner 1 at least
    // |ν|, and the normalized core has m more beads on runner 1.
    let m = cq.core_index;
    let first = cq.mu.len().max(cq.nu.len().saturating_sub(m));
    let counts = [first, first + m];
    let placed: Vec<Vec<usize>> = [&cq.mu, &cq.nu]
        .iter()
        .zip(counts)
        .map(|(q, count)| {
            // Displacements ascending from the top bead; unused beads stay put.
            let mut disp = vec![0; count - q.len()];
            disp.extend(q.parts().iter().rev());
            disp.iter().enumerate().map(|(slot, d)| slot + d).collect()
        })
        .collect();
    let height = placed.iter().filter_map(|rows| rows.last()).map(|&r| r + 1).max().unwrap_or(0);
    let mut rows = vec![[Cell::Space; 2]; height];
    for (runner, bead_rows) in placed.iter().enumerate() {
        for &row in bead_rows {
            rows[row][runner] = Cell::Bead;
        }
    }
    AbacusDisplay { rows }.partition()
}

pub fn conjugate_via_abacus(lambda: &Partition) -> Partition {
    from_bead_sequence(&to_bead_sequence(lambda).reversed_complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn seq(s: &str) -> BeadSequence {
        s.parse().unwrap()
    }

    fn rows(s: &str) -> Vec<[Cell; 2]> {
        AbacusDisplay::from_sequence(&seq(s)).rows
    }

    #[test]
    fn rim_walk_examples() {
        assert_eq!(to_bead_sequence(&p(&[6, 3, 3, 1])).to_string(), ".O..OO...O");
        assert!(to_bead_sequence(&Partition::empty()).is_empty());
        assert_eq!(to_bead_sequence(&p(&[1])).to_string(), ".O");
    }

    #[test]
    fn decode_examples() {
        assert_eq!(from_bead_sequence(&seq(".O..OO...O")), p(&[6, 3, 3, 1]));
        assert_eq!(from_bead_sequence(&seq("O.O...")), p(&[1]));
        assert_eq!(from_bead_sequence(&seq("")), Partition::empty());
        assert_eq!(from_bead_sequence(&seq("OOO...")), Partition::empty());
        assert_eq!(from_bead_sequence(&seq("○●○○●●○○○●")), p(&[6, 3, 3, 1]));
        assert!("O.x".parse::<BeadSequence>().is_err());
    }

    #[test]
    fn canonical_form_counts() {
        let s = to_bead_sequence(&p(&[6, 3, 3, 1]));
        assert!(s.is_canonical());
        assert_eq!(s.cells().iter().filter(|c| c.is_bead()).count(), 4);
        assert_eq!(s.cells().iter().filter(|c| !c.is_bead()).count(), 6);
        assert_eq!(seq("OO.O..").canonical().to_string(), ".O");
    }

    #[test]
    fn normalized_display_examples() {
        let d = normalized_display(&p(&[6, 3, 3, 1]));
        assert_eq!(d.rows, rows(".O..OO...O"));
        assert_eq!(d.to_string(), ". O\n. .\nO O\n. .\n. O");
        assert!(normalized_display(&Partition::empty()).rows().is_empty());
        assert_eq!(normalized_display(&p(&[1])).rows, rows(".O"));
        // (2) walks "..O" which puts its bead on runner 0, so a bead is prepended.
        assert_eq!(normalized_display(&p(&[2])).rows, rows("O..O"));
    }

    #[test]
    fn odd_sequences_are_padded() {
        let d = AbacusDisplay::from_sequence(&seq(".OO"));
        assert_eq!(d.rows().len(), 2);
        assert_eq!(d.to_sequence().to_string(), ".OO.");
        assert_eq!(d.partition(), p(&[1, 1]));
    }

    #[test]
    fn hooks_of_examples() {
        assert_eq!(removable_hooks(&normalized_display(&p(&[6, 3, 3, 1]))).len(), 3);
        assert!(removable_hooks(&normalized_display(&Partition::empty())).is_empty());
        assert_eq!(removable_hooks(&normalized_display(&p(&[2]))).len(), 1);
    }

    #[test]
    fn remove_hook_examples() {
        let d = normalized_display(&p(&[6, 3, 3, 1]));
        for pos in removable_hooks(&d) {
            assert_eq!(remove_hook(&d, pos).unwrap().partition().size(), 11);
        }
        let two = normalized_display(&p(&[2]));
        let pos = removable_hooks(&two)[0];
        assert_eq!(remove_hook(&two, pos).unwrap().partition(), Partition::empty());

        for bad in [
            HookPosition { runner: 1, row: 0 },
            HookPosition { runner: 0, row: 1 },
            HookPosition { runner: 1, row: 3 },
            HookPosition { runner: 2, row: 2 },
            HookPosition { runner: 0, row: 9 },
        ] {
            assert_eq!(
                remove_hook(&d, bad),
                Err(AbacusError::InvalidHookPosition { runner: bad.runner, row: bad.row })
            );
        }
    }

    #[test]
    fn core_examples() {
        assert_eq!(two_core(&p(&[6, 3, 3, 1])), p(&[2, 1]));
        assert_eq!(two_core(&Partition::empty()), Partition::empty());
        assert_eq!(two_core(&p(&[4, 2])), Partition::empty());
        let core_display = normalized_display(&p(&[6, 3, 3, 1])).pushed_up();
        assert_eq!(core_display.rows, rows("OO.O.O...."));
    }

    #[test]
    fn quotient_examples() {
        let cq = two_quotient(&p(&[6, 3, 3, 1]));
        assert_eq!(cq, CoreQuotient::new(2, p(&[2]), p(&[2, 1])));
        assert_eq!(two_quotient(&Partition::empty()), CoreQuotient::new(0, Partition::empty(), Partition::empty()));
        assert_eq!(two_quotient(&p(&[2, 1])), CoreQuotient::new(2, Partition::empty(), Partition::empty()));
        assert_eq!(two_quotient(&p(&[1, 1])), CoreQuotient::new(0, p(&[1]), Partition::empty()));
        assert_eq!(two_quotient(&p(&[2])), CoreQuotient::new(0, Partition::empty(), p(&[1])));
    }

    #[test]
    fn combine_examples() {
        assert_eq!(combine(&CoreQuotient::new(2, p(&[2]), p(&[2, 1]))), p(&[6, 3, 3, 1]));
        assert_eq!(combine(&CoreQuotient::new(0, Partition::empty(), Partition::empty())), Partition::empty());
        // Among partitions of 3 only (1,1,1) has core (1) and quotient ((1), ∅).
        let lam = combine(&CoreQuotient::new(1, p(&[1]), Partition::empty()));
        assert_eq!(lam, p(&[1, 1, 1]));
        assert_eq!(combine(&CoreQuotient::new(1, Partition::empty(), p(&[1]))), p(&[3]));
        assert_eq!(two_core(&lam), p(&[1]));
        assert_eq!(combine(&CoreQuotient::new(3, Partition::empty(), Partition::empty())), p(&[3, 2, 1]));
    }

    #[test]
    fn core_index_is_bead_imbalance() {
        for lam in [p(&[6, 3, 3, 1]), p(&[2]), p(&[1, 1]), p(&[5, 4, 1]), p(&[3, 2, 1])] {
            let [a, b] = normalized_display(&lam).bead_counts();
            assert!(b >= a);
            assert_eq!(two_quotient(&lam).core_index, b - a);
        }
    }

    #[test]
    fn conjugate_via_abacus_examples() {
        assert_eq!(conjugate_via_abacus(&p(&[6, 3, 3, 1])), p(&[4, 3, 3, 1, 1, 1]));
        assert_eq!(conjugate_via_abacus(&Partition::empty()), Partition::empty());
        assert_eq!(conjugate_via_abacus(&p(&[5])), p(&[1, 1, 1, 1, 1]));
        let d = normalized_display(&p(&[4, 3, 3, 1, 1, 1]));
        assert_eq!(d.rows, rows(".OOO..OO.O"));
    }
}
