//! Score for `GR(r, K_s, t)`: for every set `C` of `t` colors, count the
//! `K_s` in the graph `G_C` of edges colored from `C`, and sum.
//!
//! A `K_s` using fewer than `t` colors is counted once per `C` covering its colors.

use super::{count_cliques_in, signed, Score};
use crate::coloring::MultiColoring;
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// All `t`-subsets of colors `1..=r`, as bitmasks with bit `c - 1` for color `c`.
pub fn color_subsets(r: usize, t: usize) -> Vec<u16> {
    (0u16..1 << r)
        .filter(|m| m.count_ones() as usize == t)
        .collect()
}

/// Rows of the union of the given color classes (`classes[i]` has color `i + 1`).
pub fn union_rows(classes: &[Graph], mask: u16) -> Vec<u64> {
    let n = classes.first().map_or(0, Graph::order);
    let mut rows = vec![0u64; n];
    for c in Bits(mask as u64) {
        for (row, &add) in rows.iter_mut().zip(classes[c].rows()) {
            *row |= add;
        }
    }
    rows
}

fn check(mc: &MultiColoring, s: usize, t: usize) -> Result<()> {
    if s < 2 || t == 0 || t > mc.colors_used() {
        return Err(Error::Input(format!(
            "need s >= 2 and 1 <= t <= r (got s={s}, t={t}, r={})",
            mc.colors_used()
        )));
    }
    Ok(())
}

pub fn gr_score(mc: &MultiColoring, s: usize, t: usize) -> Result<Score> {
    check(mc, s, t)?;
    let classes = mc.color_classes();
    let all = crate::graph::low_mask(mc.order());
    let mut total = Score::ZERO;
    for mask in color_subsets(mc.colors_used(), t) {
        let rows = union_rows(&classes, mask);
        total = total.checked_add(Score(count_cliques_in(&rows, all, s)?))?;
    }
    Ok(total)
}

/// Change in [`gr_score`] from recoloring `{u, v}` to `new_color`. Only the
/// union graphs containing exactly one of the old and new colors change, and
/// in each the change is the number of `K_s` through the edge.
pub fn gr_delta(mc: &MultiColoring, u: usize, v: usize, new_color: u8, s: usize, t: usize) -> Result<i128> {
    check(mc, s, t)?;
    let old = mc.color(u, v);
    if new_color == old {
        return Err(Error::Input(format!("edge ({u}, {v}) already has color {old}")));
    }
    if new_color == 0 || new_color as usize > mc.colors_used() {
        return Err(Error::Input(format!("color {new_color} out of range")));
    }
    let classes = mc.color_classes();
    class_delta(&classes, u, v, old, new_color, s, t)
}

/// [`gr_delta`] on precomputed color classes.
pub(crate) fn class_delta(classes: &[Graph], u: usize, v: usize, old: u8, new: u8, s: usize, t: usize) -> Result<i128> {
    let old_bit = 1u16 << (old - 1);
    let new_bit = 1u16 << (new - 1);
    let mut delta = 0i128;
    for mask in color_subsets(classes.len(), t) {
        let sign = match (mask & old_bit != 0, mask & new_bit != 0) {
            (true, false) => -1,
            (false, true) => 1,
            _ => continue,
        };
        let common = union_common(classes, mask, u, v);
        let rows = union_rows(classes, mask);
        let through = signed(count_cliques_in(&rows, common, s - 2)?, "counting GR cliques")?;
        delta = delta
            .checked_add(sign * through)
            .ok_or(Error::Overflow("summing GR deltas"))?;
    }
    Ok(delta)
}

fn union_common(classes: &[Graph], mask: u16, u: usize, v: usize) -> u64 {
    let (mut nu, mut nv) = (0u64, 0u64);
    for c in Bits(mask as u64) {
        nu |= classes[c].row(u);
        nv |= classes[c].row(v);
    }
    nu & nv & !(1 << u) & !(1 << v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monochromatic_k4() {
        let mc = MultiColoring::monochromatic(4, 3).unwrap();
        assert_eq!(gr_score(&mc, 4, 2).unwrap(), Score(2));
        assert_eq!(gr_delta(&mc, 0, 1, 2, 4, 2).unwrap(), -1);
        let mut after = mc.clone();
        after.set_color(0, 1, 2);
        assert_eq!(gr_score(&after, 4, 2).unwrap(), Score(1));
    }

    #[test]
    fn subsets() {
        assert_eq!(color_subsets(4, 2).len(), 6);
        assert_eq!(color_subsets(3, 3), vec![0b111]);
    }

    #[test]
    fn same_color_rejected() {
        let mc = MultiColoring::monochromatic(4, 3).unwrap();
        assert!(gr_delta(&mc, 0, 1, 1, 4, 2).is_err());
    }

    #[test]
    fn swapping_within_a_pair_is_free() {
        // with r = 2 and t = 2 the only union graph holds both colors
        let mc = MultiColoring::from_colors(4, 2, vec![1, 2, 1, 2, 1, 2]).unwrap();
        assert_eq!(gr_delta(&mc, 0, 1, 2, 3, 2).unwrap(), 0);
    }
}
