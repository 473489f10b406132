//! Block patterns for the 2-row and 3-row grid constructions.
//!
//! A block is a `rows x width` strip with some cells marked; a grid
//! certificate is a concatenation of blocks, read left to right. The 2-row
//! recipe depends on `n mod 8` and the 3-row recipe on `n mod 3`:
//!
//! | `n mod 8` | `P_2 □ P_n`            | `n mod 3` | `P_3 □ P_n`  |
//! |-----------|------------------------|-----------|--------------|
//! | 0         | `(CD)^q`               | 0         | `G^q`        |
//! | 1         | `(AB)^q T1`            | 1         | `G^q G1`     |
//! | 2         | `(CD)^q T2`            | 2         | `G^q G2`     |
//! | 3         | `(AB)^q T3`            |           |              |
//! | 4         | `(CD)^q C`             |           |              |
//! | 5         | `(AB)^q A T~1`         |           |              |
//! | 6         | `(CD)^q C T2`          |           |              |
//! | 7         | `(AB)^q A T~3`         |           |              |
//!
//! The mark sets below were produced by [`derive_grid2_blocks`] and
//! [`derive_grid3_blocks`]: the lexicographically least choice (cells
//! numbered column-major, nested in the order the blocks are listed) for
//! which every recipe is an adjacency resolving set of the target size.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::certificates::verify_adjacency_set;
use crate::graph::{grid_product, GridCoords};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("cannot concatenate a {0}-row block with a {1}-row block")]
    RowMismatch(usize, usize),
}

/// A marked `rows x width` strip. Marks are `(row, col)` cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockPattern {
    pub name: String,
    pub rows: usize,
    pub width: usize,
    pub marks: BTreeSet<(usize, usize)>,
}

impl BlockPattern {
    pub fn new(
        name: impl Into<String>,
        rows: usize,
        width: usize,
        marks: &[(usize, usize)],
    ) -> Self {
        let marks: BTreeSet<_> = marks.iter().copied().collect();
        assert!(
            marks.iter().all(|&(r, c)| r < rows && c < width),
            "mark outside block"
        );
        BlockPattern {
            name: name.into(),
            rows,
            width,
            marks,
        }
    }

    /// The width-0 block.
    pub fn empty(rows: usize) -> Self {
        BlockPattern::new("", rows, 0, &[])
    }

    fn from_mask(name: &str, rows: usize, width: usize, mask: u32) -> Self {
        let marks: Vec<_> = (0..rows * width)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (i % rows, i / rows))
            .collect();
        BlockPattern::new(name, rows, width, &marks)
    }

    pub fn mark_count(&self) -> usize {
        self.marks.len()
    }

    /// Marked vertices of the `rows x width` grid with column-major labels.
    pub fn vertex_set(&self) -> Vec<usize> {
        let coords = GridCoords::new(self.rows, self.width);
        let mut set: Vec<usize> = self
            .marks
            .iter()
            .map(|&(r, c)| coords.vertex(r, c))
            .collect();
        set.sort_unstable();
        set
    }
}

impl fmt::Display for BlockPattern {
    /// One text line per row, `#` for marked cells.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: String = (0..self.width)
                .map(|c| {
                    if self.marks.contains(&(r, c)) {
                        '#'
                    } else {
                        '.'
                    }
                })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// `b1` followed by `b2`, the marks of `b2` shifted right by `b1.width`.
pub fn concatenate(b1: &BlockPattern, b2: &BlockPattern) -> Result<BlockPattern, BlockError> {
    if b1.rows != b2.rows {
        return Err(BlockError::RowMismatch(b1.rows, b2.rows));
    }
    let mut marks = b1.marks.clone();
    marks.extend(b2.marks.iter().map(|&(r, c)| (r, c + b1.width)));
    Ok(BlockPattern {
        name: format!("{}{}", b1.name, b2.name),
        rows: b1.rows,
        width: b1.width + b2.width,
        marks,
    })
}

/// Concatenates a whole sequence, left to right.
pub fn concatenate_all<'a>(
    rows: usize,
    blocks: impl IntoIterator<Item = &'a BlockPattern>,
) -> Result<BlockPattern, BlockError> {
    blocks
        .into_iter()
        .try_fold(BlockPattern::empty(rows), |acc, b| concatenate(&acc, b))
}

/// Blocks for `P_2 □ P_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid2Blocks {
    pub a: BlockPattern,
    pub b: BlockPattern,
    pub c: BlockPattern,
    pub d: BlockPattern,
    pub t1: BlockPattern,
    pub t2: BlockPattern,
    pub t3: BlockPattern,
    pub t1_tilde: BlockPattern,
    pub t3_tilde: BlockPattern,
}

/// Blocks for `P_3 □ P_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid3Blocks {
    pub g: BlockPattern,
    pub g1: BlockPattern,
    pub g2: BlockPattern,
}

/// Names of the blocks in a recipe, left to right.
pub type Recipe = Vec<&'static str>;

/// The `n mod 8` recipe for `P_2 □ P_n`, `n >= 1`.
pub fn grid2_recipe(n: usize) -> Recipe {
    let (repeat, tail): (&[&'static str], &[&'static str]) = match n % 8 {
        0 => (&["C", "D"], &[]),
        1 => (&["A", "B"], &["T1"]),
        2 => (&["C", "D"], &["T2"]),
        3 => (&["A", "B"], &["T3"]),
        4 => (&["C", "D"], &["C"]),
        5 => (&["A", "B"], &["A", "T~1"]),
        6 => (&["C", "D"], &["C", "T2"]),
        _ => (&["A", "B"], &["A", "T~3"]),
    };
    let mut recipe: Recipe = repeat.iter().copied().cycle().take(2 * (n / 8)).collect();
    recipe.extend_from_slice(tail);
    recipe
}

/// The `n mod 3` recipe for `P_3 □ P_n`, `n >= 1`.
pub fn grid3_recipe(n: usize) -> Recipe {
    let mut recipe: Recipe = vec!["G"; n / 3];
    match n % 3 {
        1 => recipe.push("G1"),
        2 => recipe.push("G2"),
        _ => {}
    }
    recipe
}

/// Compact form of a recipe, e.g. `(CD)^2 T2`.
pub fn recipe_label(recipe: &[&str]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < recipe.len() {
        let paired = i + 1 < recipe.len()
            && matches!(recipe[i], "A" | "C")
            && matches!(recipe[i + 1], "B" | "D");
        let unit: &[&str] = if paired {
            &recipe[i..i + 2]
        } else {
            &recipe[i..i + 1]
        };
        let mut reps = 1;
        while recipe
            .get(i + reps * unit.len()..)
            .is_some_and(|rest| rest.starts_with(unit))
        {
            reps += 1;
        }
        let body = unit.concat();
        parts.push(match (reps, unit.len()) {
            (1, _) => body,
            (_, 1) => format!("{body}^{reps}"),
            _ => format!("({body})^{reps}"),
        });
        i += reps * unit.len();
    }
    parts.join(" ")
}

impl Grid2Blocks {
    pub fn get(&self, name: &str) -> &BlockPattern {
        match name {
            "A" => &self.a,
            "B" => &self.b,
            "C" => &self.c,
            "D" => &self.d,
            "T1" => &self.t1,
            "T2" => &self.t2,
            "T3" => &self.t3,
            "T~1" => &self.t1_tilde,
            "T~3" => &self.t3_tilde,
            other => panic!("no 2-row block named {other}"),
        }
    }

    pub fn assemble(&self, recipe: &[&str]) -> BlockPattern {
        concatenate_all(2, recipe.iter().map(|name| self.get(name)))
            .expect("all blocks have two rows")
    }
}

impl Grid3Blocks {
    pub fn get(&self, name: &str) -> &BlockPattern {
        match name {
            "G" => &self.g,
            "G1" => &self.g1,
            "G2" => &self.g2,
            other => panic!("no 3-row block named {other}"),
        }
    }

    pub fn assemble(&self, recipe: &[&str]) -> BlockPattern {
        concatenate_all(3, recipe.iter().map(|name| self.get(name)))
            .expect("all blocks have three rows")
    }
}

const A: &[(usize, usize)] = &[(0, 0), (0, 2), (1, 2)];
const B: &[(usize, usize)] = &[(0, 2), (1, 0), (1, 2)];
const C: &[(usize, usize)] = &[(0, 0), (0, 2), (1, 1)];
const D: &[(usize, usize)] = &[(0, 1), (1, 0), (1, 2)];
const T1: &[(usize, usize)] = &[(0, 0)];
const T2: &[(usize, usize)] = &[(0, 1), (1, 1)];
const T3: &[(usize, usize)] = &[(0, 0), (0, 2)];
const T1_TILDE: &[(usize, usize)] = &[(1, 0)];
const T3_TILDE: &[(usize, usize)] = &[(1, 0), (1, 2)];
const G: &[(usize, usize)] = &[(0, 1), (1, 2), (2, 1)];
const G1: &[(usize, usize)] = &[(0, 0), (1, 0)];
const G2: &[(usize, usize)] = &[(0, 1), (2, 1)];

/// The frozen 2-row blocks.
pub fn grid2_blocks() -> Grid2Blocks {
    Grid2Blocks {
        a: BlockPattern::new("A", 2, 4, A),
        b: BlockPattern::new("B", 2, 4, B),
        c: BlockPattern::new("C", 2, 4, C),
        d: BlockPattern::new("D", 2, 4, D),
        t1: BlockPattern::new("T1", 2, 1, T1),
        t2: BlockPattern::new("T2", 2, 2, T2),
        t3: BlockPattern::new("T3", 2, 3, T3),
        t1_tilde: BlockPattern::new("T~1", 2, 1, T1_TILDE),
        t3_tilde: BlockPattern::new("T~3", 2, 3, T3_TILDE),
    }
}

/// The frozen 3-row blocks.
pub fn grid3_blocks() -> Grid3Blocks {
    Grid3Blocks {
        g: BlockPattern::new("G", 3, 3, G),
        g1: BlockPattern::new("G1", 3, 1, G1),
        g2: BlockPattern::new("G2", 3, 2, G2),
    }
}

/// Whether `pattern` marks an adjacency resolving set of its grid.
pub fn resolves_grid(pattern: &BlockPattern) -> bool {
    let (g, _) = grid_product(pattern.rows, pattern.width);
    verify_adjacency_set(&g, &pattern.vertex_set())
        .expect("pattern inside its grid")
        .valid
}

/// Masks over `rows * width` cells with exactly `marks` bits, ascending.
fn masks(rows: usize, width: usize, marks: u32) -> impl Iterator<Item = u32> {
    (0u32..1 << (rows * width)).filter(move |m| m.count_ones() == marks)
}

/// Column counts checked during the search for a recipe residue: enough
/// repetitions of the periodic part that every block boundary and the
/// unseen-vertex budget are exercised.
fn search_lengths(period: usize, residue: usize, min_n: usize) -> Vec<usize> {
    (0..4)
        .map(|q| q * period + residue)
        .filter(|&n| n >= min_n)
        .collect()
}

fn recipe_ok<F: Fn(&[&str]) -> BlockPattern>(
    assemble: &F,
    recipe: fn(usize) -> Recipe,
    ns: &[usize],
) -> bool {
    ns.iter().all(|&n| resolves_grid(&assemble(&recipe(n))))
}

/// Exhaustive search for the 2-row blocks. Mark counts are forced by the
/// target size `ceil((3n - 1) / 4)`: C and D carry 3 marks, T1 one, T2 and
/// T3 two, and with `|A| = a` (2 or 3) B carries `6 - a`, T~1 carries
/// `4 - a` and T~3 carries `5 - a`.
pub fn derive_grid2_blocks() -> Option<Grid2Blocks> {
    let cd = derive_cd()?;
    let ab = derive_ab()?;
    Some(Grid2Blocks {
        a: ab.0,
        b: ab.1,
        t1: ab.2,
        t3: ab.3,
        t1_tilde: ab.4,
        t3_tilde: ab.5,
        c: cd.0,
        d: cd.1,
        t2: cd.2,
    })
}

fn derive_cd() -> Option<(BlockPattern, BlockPattern, BlockPattern)> {
    let mut blocks = grid2_placeholder();
    for c in masks(2, 4, 3) {
        blocks.c = BlockPattern::from_mask("C", 2, 4, c);
        if !resolves_grid(&blocks.c) {
            continue;
        }
        for d in masks(2, 4, 3) {
            blocks.d = BlockPattern::from_mask("D", 2, 4, d);
            let asm = |r: &[&str]| blocks.assemble(r);
            if !recipe_ok(&asm, grid2_recipe, &search_lengths(8, 0, 2))
                || !recipe_ok(&asm, grid2_recipe, &search_lengths(8, 4, 2))
            {
                continue;
            }
            for t2 in masks(2, 2, 2) {
                blocks.t2 = BlockPattern::from_mask("T2", 2, 2, t2);
                let asm = |r: &[&str]| blocks.assemble(r);
                if recipe_ok(&asm, grid2_recipe, &search_lengths(8, 2, 2))
                    && recipe_ok(&asm, grid2_recipe, &search_lengths(8, 6, 2))
                {
                    return Some((blocks.c, blocks.d, blocks.t2));
                }
            }
        }
    }
    None
}

type AbFamily = (
    BlockPattern,
    BlockPattern,
    BlockPattern,
    BlockPattern,
    BlockPattern,
    BlockPattern,
);

fn derive_ab() -> Option<AbFamily> {
    let mut blocks = grid2_placeholder();
    let a_masks = (0u32..1 << 8).filter(|m| matches!(m.count_ones(), 2 | 3));
    for a in a_masks {
        let a_marks = a.count_ones();
        blocks.a = BlockPattern::from_mask("A", 2, 4, a);
        for b in masks(2, 4, 6 - a_marks) {
            blocks.b = BlockPattern::from_mask("B", 2, 4, b);
            let t1 = first_tail(&mut blocks, "T1", 1, 1, 1);
            let t3 = first_tail(&mut blocks, "T3", 3, 2, 3);
            let t1_tilde = first_tail(&mut blocks, "T~1", 1, 4 - a_marks, 5);
            let t3_tilde = first_tail(&mut blocks, "T~3", 3, 5 - a_marks, 7);
            if let (Some(t1), Some(t3), Some(t1_tilde), Some(t3_tilde)) =
                (t1, t3, t1_tilde, t3_tilde)
            {
                return Some((blocks.a, blocks.b, t1, t3, t1_tilde, t3_tilde));
            }
        }
    }
    None
}

/// Least tail `name` (of the given width and mark count) completing the
/// recipes with `n mod 8 == residue`.
fn first_tail(
    blocks: &mut Grid2Blocks,
    name: &'static str,
    width: usize,
    marks: u32,
    residue: usize,
) -> Option<BlockPattern> {
    if marks as usize > 2 * width {
        return None;
    }
    for t in masks(2, width, marks) {
        let tail = BlockPattern::from_mask(name, 2, width, t);
        match name {
            "T1" => blocks.t1 = tail.clone(),
            "T3" => blocks.t3 = tail.clone(),
            "T~1" => blocks.t1_tilde = tail.clone(),
            _ => blocks.t3_tilde = tail.clone(),
        }
        let asm = |r: &[&str]| blocks.assemble(r);
        if recipe_ok(&asm, grid2_recipe, &search_lengths(8, residue, 2)) {
            return Some(tail);
        }
    }
    None
}

fn grid2_placeholder() -> Grid2Blocks {
    let e = |name: &str, w| BlockPattern::new(name, 2, w, &[]);
    Grid2Blocks {
        a: e("A", 4),
        b: e("B", 4),
        c: e("C", 4),
        d: e("D", 4),
        t1: e("T1", 1),
        t2: e("T2", 2),
        t3: e("T3", 3),
        t1_tilde: e("T~1", 1),
        t3_tilde: e("T~3", 3),
    }
}

/// Exhaustive search for the 3-row blocks: G carries 3 marks, G1 two and
/// G2 two, forced by the target sizes `n` and `n + 1`.
pub fn derive_grid3_blocks() -> Option<Grid3Blocks> {
    let mut blocks = Grid3Blocks {
        g: BlockPattern::new("G", 3, 3, &[]),
        g1: BlockPattern::new("G1", 3, 1, &[]),
        g2: BlockPattern::new("G2", 3, 2, &[]),
    };
    for g in masks(3, 3, 3) {
        blocks.g = BlockPattern::from_mask("G", 3, 3, g);
        let asm = |r: &[&str]| blocks.assemble(r);
        if !recipe_ok(&asm, grid3_recipe, &search_lengths(3, 0, 2)) {
            continue;
        }
        let g1 = masks(3, 1, 2)
            .map(|m| BlockPattern::from_mask("G1", 3, 1, m))
            .find(|g1| {
                let mut trial = blocks.clone();
                trial.g1 = g1.clone();
                recipe_ok(
                    &|r: &[&str]| trial.assemble(r),
                    grid3_recipe,
                    &search_lengths(3, 1, 2),
                )
            });
        let g2 = masks(3, 2, 2)
            .map(|m| BlockPattern::from_mask("G2", 3, 2, m))
            .find(|g2| {
                let mut trial = blocks.clone();
                trial.g2 = g2.clone();
                recipe_ok(
                    &|r: &[&str]| trial.assemble(r),
                    grid3_recipe,
                    &search_lengths(3, 2, 2),
                )
            });
        if let (Some(g1), Some(g2)) = (g1, g2) {
            blocks.g1 = g1;
            blocks.g2 = g2;
            return Some(blocks);
        }
    }
    None
}
