//! Ordered partition refinement over doubly linked classes.
//!
//! Every class keeps its members in ascending *rank*, where a vertex's rank is
//! its position in the sequence the partition was created from (updated by
//! [`OrderedPartition::move_to_back`]). Refining pulls the subset members of
//! each class into a new class placed immediately before it. When a subset is
//! supplied in rank order the pulled members are appended in O(1) each; any
//! split group that arrives out of order is re-sorted, so the relative order of
//! members is preserved either way.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Vertex;

const NIL: u32 = u32::MAX;

pub type ClassId = usize;

/// Per-vertex links, packed so one access touches one cache line.
#[derive(Debug, Clone, Copy)]
struct Node {
    next: u32,
    prev: u32,
    class: u32,
    stamp: u32,
    rank: u32,
}

const DETACHED: Node = Node {
    next: NIL,
    prev: NIL,
    class: NIL,
    stamp: 0,
    rank: 0,
};

#[derive(Debug, Clone, Copy)]
struct Class {
    head: u32,
    tail: u32,
    len: u32,
    prev: u32,
    next: u32,
    split: u32,
    sorted: bool,
}

const EMPTY_CLASS: Class = Class {
    head: NIL,
    tail: NIL,
    len: 0,
    prev: NIL,
    next: NIL,
    split: NIL,
    sorted: true,
};

#[derive(Debug, Clone)]
pub struct OrderedPartition {
    nodes: Vec<Node>,
    next_rank: u32,
    classes: Vec<Class>,
    free: Vec<u32>,
    first: u32,
    count: usize,
    moves: u64,
    touched: Vec<u32>,
    epoch: u32,
}

#[inline]
fn opt(x: u32) -> Option<usize> {
    (x != NIL).then_some(x as usize)
}

impl OrderedPartition {
    /// A single class holding `seq` in the given order. The ground set is the
    /// set of entries of `seq`, each of which must lie in `0..universe`.
    pub fn new(universe: usize, seq: &[Vertex]) -> Result<Self> {
        // ranks grow past the universe through move_to_back
        let limit = (u32::MAX / 2) as usize;
        if universe > limit {
            return Err(Error::GraphTooLarge { n: universe, limit });
        }
        let mut p = OrderedPartition {
            nodes: vec![DETACHED; universe],
            next_rank: seq.len() as u32,
            classes: Vec::new(),
            free: Vec::new(),
            first: NIL,
            count: 0,
            moves: 0,
            touched: Vec::new(),
            epoch: 0,
        };
        if seq.is_empty() {
            return Ok(p);
        }
        let c = p.alloc_class();
        p.first = c;
        p.count = 1;
        for (i, &v) in seq.iter().enumerate() {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    endpoint: v,
                    n: universe,
                });
            }
            if p.nodes[v].class != NIL {
                return Err(Error::NotAPermutation(format!("vertex {v} repeated")));
            }
            p.nodes[v].rank = i as u32;
            p.push_back(c, v as u32);
        }
        Ok(p)
    }

    fn alloc_class(&mut self) -> u32 {
        match self.free.pop() {
            Some(id) => {
                self.classes[id as usize] = EMPTY_CLASS;
                id
            }
            None => {
                self.classes.push(EMPTY_CLASS);
                (self.classes.len() - 1) as u32
            }
        }
    }

    #[inline]
    fn class(&mut self, c: u32) -> &mut Class {
        &mut self.classes[c as usize]
    }

    #[inline]
    fn node(&mut self, v: u32) -> &mut Node {
        &mut self.nodes[v as usize]
    }

    fn insert_class_before(&mut self, at: u32) -> u32 {
        let c = self.alloc_class();
        let before = self.class(at).prev;
        self.class(c).prev = before;
        self.class(c).next = at;
        self.class(at).prev = c;
        if before == NIL {
            self.first = c;
        } else {
            self.class(before).next = c;
        }
        self.count += 1;
        c
    }

    fn insert_class_front(&mut self) -> u32 {
        if self.first == NIL {
            let c = self.alloc_class();
            self.first = c;
            self.count = 1;
            c
        } else {
            self.insert_class_before(self.first)
        }
    }

    fn remove_class(&mut self, c: u32) {
        debug_assert_eq!(self.class(c).len, 0);
        let Class { prev, next, .. } = *self.class(c);
        if prev == NIL {
            self.first = next;
        } else {
            self.class(prev).next = next;
        }
        if next != NIL {
            self.class(next).prev = prev;
        }
        self.count -= 1;
        self.free.push(c);
    }

    fn unlink(&mut self, v: u32) {
        let Node {
            next, prev, class, ..
        } = *self.node(v);
        if prev == NIL {
            self.class(class).head = next;
        } else {
            self.node(prev).next = next;
        }
        if next == NIL {
            self.class(class).tail = prev;
        } else {
            self.node(next).prev = prev;
        }
        self.class(class).len -= 1;
        self.node(v).class = NIL;
    }

    fn push_back(&mut self, c: u32, v: u32) {
        let tail = self.class(c).tail;
        let rank = self.node(v).rank;
        if tail != NIL && self.node(tail).rank > rank {
            self.class(c).sorted = false;
        }
        let node = self.node(v);
        node.prev = tail;
        node.next = NIL;
        node.class = c;
        if tail == NIL {
            self.class(c).head = v;
        } else {
            self.node(tail).next = v;
        }
        let class = self.class(c);
        class.tail = v;
        class.len += 1;
    }

    fn sort_class(&mut self, c: u32) {
        let mut members: Vec<u32> = self.members(c as usize).map(|v| v as u32).collect();
        members.sort_unstable_by_key(|&v| self.nodes[v as usize].rank);
        *self.class(c) = Class {
            prev: self.class(c).prev,
            next: self.class(c).next,
            split: self.class(c).split,
            ..EMPTY_CLASS
        };
        for v in members {
            self.push_back(c, v);
        }
    }

    /// Splits every class `Q` meeting `subset` into `(Q ∩ subset, Q ∖ subset)`
    /// when both parts are non-empty. Duplicates in `subset` are ignored.
    ///
    /// On error the partition is left unchanged.
    pub fn refine(&mut self, subset: &[Vertex]) -> Result<()> {
        if let Some(&bad) = subset
            .iter()
            .find(|&&v| v >= self.nodes.len() || self.nodes[v].class == NIL)
        {
            return Err(Error::VertexNotInGroundSet(bad));
        }
        self.refine_trusted(subset);
        Ok(())
    }

    /// [`refine`](Self::refine) for subsets known to lie in the ground set.
    pub(crate) fn refine_trusted(&mut self, subset: &[Vertex]) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.nodes.iter_mut().for_each(|x| x.stamp = 0);
            self.epoch = 1;
        }
        for &x in subset {
            let x = x as u32;
            let epoch = self.epoch;
            let node = self.node(x);
            if node.stamp == epoch {
                continue;
            }
            node.stamp = epoch;
            let c = node.class;
            let target = match self.class(c).split {
                NIL => {
                    let a = self.insert_class_before(c);
                    self.class(c).split = a;
                    self.touched.push(c);
                    a
                }
                a => a,
            };
            self.unlink(x);
            self.push_back(target, x);
            self.moves += 1;
        }
        let touched = std::mem::take(&mut self.touched);
        for &c in &touched {
            let a = self.class(c).split;
            self.class(c).split = NIL;
            if !self.class(a).sorted {
                self.sort_class(a);
            }
            if self.class(c).len == 0 {
                self.remove_class(c);
            }
        }
        self.touched = touched;
        self.touched.clear();
    }

    /// Moves `v` to the end of its class.
    pub fn move_to_back(&mut self, v: Vertex) -> Result<()> {
        let c = self.locate(v)?;
        let v = v as u32;
        self.unlink(v);
        let rank = self.next_rank;
        self.node(v).rank = rank;
        self.next_rank += 1;
        self.push_back(c, v);
        self.moves += 1;
        Ok(())
    }

    /// Removes `v` from its class (dropping the class if it empties) and
    /// places it in a fresh singleton class in front of all others.
    pub fn isolate_front(&mut self, v: Vertex) -> Result<()> {
        let c = self.locate(v)?;
        let v = v as u32;
        self.unlink(v);
        if self.class(c).len == 0 {
            self.remove_class(c);
        }
        let front = self.insert_class_front();
        self.push_back(front, v);
        self.moves += 1;
        Ok(())
    }

    fn locate(&self, v: Vertex) -> Result<u32> {
        match self.nodes.get(v) {
            Some(node) if node.class != NIL => Ok(node.class),
            _ => Err(Error::VertexNotInGroundSet(v)),
        }
    }

    /// Number of classes.
    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Total member moves performed so far.
    pub fn moves(&self) -> u64 {
        self.moves
    }

    pub fn class_of(&self, v: Vertex) -> Option<ClassId> {
        self.nodes.get(v).and_then(|node| opt(node.class))
    }

    pub fn first_class(&self) -> Option<ClassId> {
        opt(self.first)
    }

    pub fn next_class(&self, c: ClassId) -> Option<ClassId> {
        opt(self.classes[c].next)
    }

    pub fn class_len(&self, c: ClassId) -> usize {
        self.classes[c].len as usize
    }

    pub fn front(&self, c: ClassId) -> Vertex {
        self.classes[c].head as usize
    }

    pub fn members(&self, c: ClassId) -> impl Iterator<Item = Vertex> + '_ {
        let mut cur = self.classes[c].head;
        std::iter::from_fn(move || {
            let v = opt(cur)?;
            cur = self.nodes[v].next;
            Some(v)
        })
    }

    pub fn class_ids(&self) -> impl Iterator<Item = ClassId> + '_ {
        let mut cur = self.first;
        std::iter::from_fn(move || {
            let c = opt(cur)?;
            cur = self.classes[c].next;
            Some(c)
        })
    }

    pub fn to_classes(&self) -> Vec<Vec<Vertex>> {
        self.class_ids()
            .map(|c| self.members(c).collect())
            .collect()
    }

    /// All members, class by class.
    pub fn sequence(&self) -> Vec<Vertex> {
        self.class_ids().flat_map(|c| self.members(c)).collect()
    }

    /// [`sequence`](Self::sequence) plus the end offset of each class in it.
    pub fn flatten(&self) -> (Vec<Vertex>, Vec<usize>) {
        let mut members = Vec::with_capacity(self.nodes.len());
        let mut ends = Vec::with_capacity(self.count);
        for c in self.class_ids() {
            members.extend(self.members(c));
            ends.push(members.len());
        }
        (members, ends)
    }

    /// Renders as `(a,b)(c)` using `name` for each vertex.
    pub fn format_with<F, S>(&self, name: F) -> String
    where
        F: Fn(Vertex) -> S,
        S: AsRef<str>,
    {
        format_classes(&self.to_classes(), name)
    }
}

pub fn format_classes<F, S>(classes: &[Vec<Vertex>], name: F) -> String
where
    F: Fn(Vertex) -> S,
    S: AsRef<str>,
{
    let mut out = String::new();
    for class in classes {
        out.push('(');
        for (i, &v) in class.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", name(v).as_ref());
        }
        out.push(')');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn show(p: &OrderedPartition) -> String {
        p.format_with(|v| v.to_string())
    }

    #[test]
    fn empty_and_full_refinements_are_noops() {
        let mut p = OrderedPartition::new(5, &[3, 1, 4, 0, 2]).unwrap();
        p.refine(&[]).unwrap();
        assert_eq!(show(&p), "(3,1,4,0,2)");
        p.refine(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(show(&p), "(3,1,4,0,2)");
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn split_places_subset_first_and_keeps_order() {
        let mut p = OrderedPartition::new(6, &[0, 1, 2, 3, 4, 5]).unwrap();
        p.refine(&[4, 1]).unwrap();
        assert_eq!(show(&p), "(1,4)(0,2,3,5)");
        p.refine(&[5, 4, 0]).unwrap();
        assert_eq!(show(&p), "(4)(1)(0,5)(2,3)");
    }

    #[test]
    fn unknown_vertex_leaves_partition_intact() {
        let mut p = OrderedPartition::new(4, &[0, 1, 2]).unwrap();
        assert_eq!(p.refine(&[1, 3]), Err(Error::VertexNotInGroundSet(3)));
        assert_eq!(p.refine(&[9]), Err(Error::VertexNotInGroundSet(9)));
        assert_eq!(show(&p), "(0,1,2)");
    }

    #[test]
    fn move_and_isolate() {
        let mut p = OrderedPartition::new(4, &[0, 1, 2, 3]).unwrap();
        p.refine(&[2, 3]).unwrap();
        p.move_to_back(2).unwrap();
        assert_eq!(show(&p), "(3,2)(0,1)");
        p.isolate_front(1).unwrap();
        assert_eq!(show(&p), "(1)(3,2)(0)");
        p.isolate_front(0).unwrap();
        assert_eq!(show(&p), "(0)(1)(3,2)");
        // ranks after move_to_back still drive order preservation
        p.refine(&[2, 3]).unwrap();
        assert_eq!(show(&p), "(0)(1)(3,2)");
        p.refine(&[2]).unwrap();
        assert_eq!(show(&p), "(0)(1)(2)(3)");
    }

    proptest! {
        #[test]
        fn refine_matches_set_semantics(
            perm in Just((0..12usize).collect::<Vec<_>>()).prop_shuffle(),
            subsets in prop::collection::vec(prop::collection::vec(0..12usize, 0..8), 0..8),
        ) {
            let mut p = OrderedPartition::new(12, &perm).unwrap();
            let mut model: Vec<Vec<usize>> = vec![perm.clone()];
            for s in &subsets {
                p.refine(s).unwrap();
                model = model
                    .into_iter()
                    .flat_map(|class| {
                        let (a, b): (Vec<_>, Vec<_>) = class.iter().partition(|v| s.contains(v));
                        [a, b].into_iter().filter(|x| !x.is_empty())
                    })
                    .collect();
                prop_assert_eq!(p.to_classes(), model.clone());
            }
            let total: usize = p.class_ids().map(|c| p.class_len(c)).sum();
            prop_assert_eq!(total, 12);
            for c in p.class_ids() {
                for v in p.members(c) {
                    prop_assert_eq!(p.class_of(v), Some(c));
                }
            }
        }
    }
}
