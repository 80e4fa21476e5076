//! Left actions of one group on another by automorphisms.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable, Subgroup};
use crate::hom::Homomorphism;

#[derive(Clone, Debug)]
pub struct GroupAction {
    actor: Arc<GroupTable>,
    space: Arc<GroupTable>,
    /// `table[p·|S| + s] = p ▷ s`
    table: Vec<Elem>,
}

impl GroupAction {
    /// Validates that every row is an automorphism of `space` and that
    /// `p ↦ (s ↦ p▷s)` is a homomorphism into `Aut(space)`.
    pub fn new(actor: &Arc<GroupTable>, space: &Arc<GroupTable>, table: Vec<Elem>) -> Result<Self> {
        let action = GroupAction { actor: actor.clone(), space: space.clone(), table };
        action.validate()?;
        Ok(action)
    }

    pub(crate) fn new_unchecked(actor: &Arc<GroupTable>, space: &Arc<GroupTable>, table: Vec<Elem>) -> Self {
        GroupAction { actor: actor.clone(), space: space.clone(), table }
    }

    pub fn trivial(actor: &Arc<GroupTable>, space: &Arc<GroupTable>) -> Self {
        let row: Vec<Elem> = space.elements().collect();
        let table = (0..actor.order()).flat_map(|_| row.iter().copied()).collect();
        GroupAction { actor: actor.clone(), space: space.clone(), table }
    }

    /// Extends automorphisms given on the actor's generators to the whole
    /// actor, using `(x·g)▷s = x▷(g▷s)`.
    pub fn from_generator_images(
        actor: &Arc<GroupTable>,
        space: &Arc<GroupTable>,
        images: &[Vec<Elem>],
    ) -> Result<Self> {
        let gens = actor.generators();
        if images.len() != gens.len() || images.iter().any(|im| im.len() != space.order()) {
            return Err(Error::InvalidAction("one automorphism per actor generator expected".into()));
        }
        let ns = space.order();
        let mut rows: Vec<Option<Vec<Elem>>> = vec![None; actor.order()];
        rows[0] = Some(space.elements().collect());
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (k, &g) in gens.iter().enumerate() {
                let y = actor.mul(x, g) as usize;
                let row_x = rows[x as usize].as_ref().unwrap();
                let composed: Vec<Elem> = (0..ns).map(|s| row_x[images[k][s] as usize]).collect();
                match &rows[y] {
                    Some(existing) if *existing != composed => return Err(Error::InconsistentImages),
                    Some(_) => {}
                    None => {
                        rows[y] = Some(composed);
                        queue.push_back(y as Elem);
                    }
                }
            }
        }
        let table = rows.into_iter().flat_map(|r| r.expect("generators span actor")).collect();
        GroupAction::new(actor, space, table)
    }

    fn validate(&self) -> Result<()> {
        let (np, ns) = (self.actor.order(), self.space.order());
        if self.table.len() != np * ns {
            return Err(Error::InvalidAction("table has the wrong shape".into()));
        }
        if (0..ns).any(|s| self.table[s] != s as Elem) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for p in self.actor.elements() {
            let row = self.row(p);
            let mut seen = vec![false; ns];
            for &s in row {
                if s as usize >= ns || std::mem::replace(&mut seen[s as usize], true) {
                    return Err(Error::InvalidAction(format!("element {p} does not act bijectively")));
                }
            }
            for &g in self.space.generators() {
                for x in self.space.elements() {
                    if row[self.space.mul(x, g) as usize] != self.space.mul(row[x as usize], row[g as usize]) {
                        return Err(Error::InvalidAction(format!("element {p} does not act by an automorphism")));
                    }
                }
            }
        }
        for p in self.actor.elements() {
            for &g in self.actor.generators() {
                let pg = self.actor.mul(p, g);
                if (0..ns as Elem).any(|s| self.apply(pg, s) != self.apply(p, self.apply(g, s))) {
                    return Err(Error::InvalidAction(format!("not a homomorphism at ({p}, {g})")));
                }
            }
        }
        Ok(())
    }

    pub fn actor(&self) -> &Arc<GroupTable> {
        &self.actor
    }

    pub fn space(&self) -> &Arc<GroupTable> {
        &self.space
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, p: Elem, s: Elem) -> Elem {
        self.table[p as usize * self.space.order() + s as usize]
    }

    pub fn row(&self, p: Elem) -> &[Elem] {
        let ns = self.space.order();
        &self.table[p as usize * ns..(p as usize + 1) * ns]
    }

    pub fn is_trivial(&self) -> bool {
        self.actor.elements().all(|p| self.row(p).iter().enumerate().all(|(i, &s)| i as Elem == s))
    }

    /// Elements of the actor acting as the identity.
    pub fn kernel(&self) -> Subgroup {
        let members: Vec<Elem> =
            self.actor.elements().filter(|&p| self.row(p).iter().enumerate().all(|(i, &s)| i as Elem == s)).collect();
        Subgroup::from_members(&self.actor, &members).expect("kernel of an action is a subgroup")
    }

    /// The action pulled back along `f: Q → actor`, so `q▷s = f(q)▷s`.
    pub fn via(&self, f: &Homomorphism) -> Result<GroupAction> {
        if f.target().order() != self.actor.order() {
            return Err(Error::GroupMismatch);
        }
        let table = f.source().elements().flat_map(|q| self.row(f.apply(q)).iter().copied()).collect();
        Ok(GroupAction::new_unchecked(f.source(), &self.space, table))
    }
}

/// `g ▷ s = g·s·g⁻¹` of `G` on a normal subgroup, as an action on the
/// subgroup's embedded group.
pub fn conjugation_action(g: &Arc<GroupTable>, sub: &Subgroup) -> Result<GroupAction> {
    if let Err((x, s)) = sub.normality_witness() {
        return Err(Error::NotNormal { g: x, s });
    }
    let space = sub.group();
    let mut table = Vec::with_capacity(g.order() * sub.order());
    for x in g.elements() {
        for &s in sub.members() {
            table.push(sub.local_index(g.conj(x, s)).expect("normal subgroup"));
        }
    }
    Ok(GroupAction::new_unchecked(g, space, table))
}
