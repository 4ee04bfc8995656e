//! Move systems for the weak-order congruences Θ231, Θ312, Θsub, ΘtB and
//! Θ3412, with downward/upward projections and class enumeration.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum CongruenceKind {
    C231,
    C312,
    CSub,
    CTb,
    C3412,
}

impl CongruenceKind {
    pub const ALL: [CongruenceKind; 5] =
        [CongruenceKind::C231, CongruenceKind::C312, CongruenceKind::CSub, CongruenceKind::CTb, CongruenceKind::C3412];

    /// Move kinds whose applicability defines this congruence.
    pub fn move_kinds(self) -> &'static [MoveKind] {
        match self {
            CongruenceKind::C231 => &[MoveKind::M231_213],
            CongruenceKind::C312 => &[MoveKind::M312_132],
            CongruenceKind::CSub => &[MoveKind::M231_213, MoveKind::M312_132],
            CongruenceKind::CTb => &[MoveKind::M3412_3142, MoveKind::M2413_2143],
            CongruenceKind::C3412 => &[MoveKind::M3412_3142],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CongruenceKind::C231 => "231",
            CongruenceKind::C312 => "312",
            CongruenceKind::CSub => "sub",
            CongruenceKind::CTb => "tb",
            CongruenceKind::C3412 => "3412",
        }
    }
}

impl fmt::Display for CongruenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CongruenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CongruenceKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown congruence {s:?} (231, 312, sub, tb, 3412)")))
    }
}

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    M231_213,
    M312_132,
    M3412_3142,
    M2413_2143,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    Down,
    Up,
}

/// An adjacent transposition at 1-based positions `position`, `position + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Move {
    pub position: usize,
    pub direction: Direction,
    pub kind: MoveKind,
}

impl Move {
    pub fn apply(&self, x: &Permutation) -> Permutation {
        x.swapped(self.position - 1)
    }

    pub fn reversed(&self) -> Move {
        let direction = match self.direction {
            Direction::Down => Direction::Up,
            Direction::Up => Direction::Down,
        };
        Move { direction, ..*self }
    }
}

/// Witness test for a move swapping the adjacent pair at 0-based `i`.
/// The values `lo < hi` are the two swapped entries; `L`/`R` are entries
/// strictly between them to the left of `i` / right of `i + 1`.
fn move_applies(w: &[u8], i: usize, kind: MoveKind) -> bool {
    let (lo, hi) = if w[i] < w[i + 1] { (w[i], w[i + 1]) } else { (w[i + 1], w[i]) };
    let between = |v: &u8| *v > lo && *v < hi;
    match kind {
        MoveKind::M231_213 => w[..i].iter().any(between),
        MoveKind::M312_132 => w[i + 2..].iter().any(between),
        MoveKind::M3412_3142 | MoveKind::M2413_2143 => {
            let want_r_less = kind == MoveKind::M3412_3142;
            w[..i]
                .iter()
                .filter(|v| between(v))
                .any(|&l| w[i + 2..].iter().filter(|v| between(v)).any(|&r| (r < l) == want_r_less))
        }
    }
}

fn first_kind(w: &[u8], i: usize, k: CongruenceKind) -> Option<MoveKind> {
    if k == CongruenceKind::CSub {
        // Some value lies strictly between the swapped pair iff they differ by 2+.
        if w[i].abs_diff(w[i + 1]) < 2 {
            return None;
        }
        return Some(if move_applies(w, i, MoveKind::M231_213) { MoveKind::M231_213 } else { MoveKind::M312_132 });
    }
    k.move_kinds().iter().copied().find(|&m| move_applies(w, i, m))
}

fn moves(x: &Permutation, k: CongruenceKind, direction: Direction) -> Vec<(Move, Permutation)> {
    let w = x.word();
    let positions = match direction {
        Direction::Down => x.descents(),
        Direction::Up => x.ascents(),
    };
    positions
        .into_iter()
        .filter_map(|i| {
            first_kind(w, i, k).map(|kind| {
                let m = Move { position: i + 1, direction, kind };
                (m, x.swapped(i))
            })
        })
        .collect()
}

/// Covers `x ⋖ y` with `x ≡ y`, one per descent position.
pub fn down_moves(y: &Permutation, k: CongruenceKind) -> Vec<(Move, Permutation)> {
    moves(y, k, Direction::Down)
}

pub fn up_moves(x: &Permutation, k: CongruenceKind) -> Vec<(Move, Permutation)> {
    moves(x, k, Direction::Up)
}

fn first_position(w: &[u8], k: CongruenceKind, down: bool) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&i| (w[i] > w[i + 1]) == down && first_kind(w, i, k).is_some())
}

/// Minimum of the class; smallest-position move first.
pub fn project_down(y: &Permutation, k: CongruenceKind) -> Permutation {
    let mut w = y.word().to_vec();
    while let Some(i) = first_position(&w, k, true) {
        w.swap(i, i + 1);
    }
    Permutation::from_word_unchecked(w)
}

pub fn project_up(x: &Permutation, k: CongruenceKind) -> Permutation {
    let mut w = x.word().to_vec();
    while let Some(i) = first_position(&w, k, false) {
        w.swap(i, i + 1);
    }
    Permutation::from_word_unchecked(w)
}

/// True when no down-move applies, i.e. `x` is a class minimum.
pub fn is_class_min(x: &Permutation, k: CongruenceKind) -> bool {
    first_position(x.word(), k, true).is_none()
}

pub fn is_class_max(x: &Permutation, k: CongruenceKind) -> bool {
    first_position(x.word(), k, false).is_none()
}

/// The whole class, found by closing under moves in both directions.
pub fn congruence_class(x: &Permutation, k: CongruenceKind) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(x.clone());
    queue.push_back(x.clone());
    while let Some(y) = queue.pop_front() {
        for (_, z) in down_moves(&y, k).into_iter().chain(up_moves(&y, k)) {
            if seen.insert(z.clone()) {
                queue.push_back(z);
            }
        }
    }
    seen
}
