//! Strata of Frobenius-fixed points of [Z/H] for a few finite groups.

use greenfn::group_data::{FiniteGroup, FiniteGroupWithAutomorphism};
use greenfn::stack_points::FiniteActionWithFrobenius;

fn show(action: &FiniteActionWithFrobenius) -> greenfn::Result<()> {
    let group = action.group();
    let d = action.decompose()?;
    println!("{} / {} / {}", group.group().name(), group.description(), action.name());
    for s in d.strata() {
        println!(
            "  [{}] class {:>2}  fixed {:>2}  centralizer {:>2}  orbits {:>2}  mass {}",
            group.group().label(s.representative),
            s.class_size,
            s.fixed.len(),
            s.centralizer.len(),
            s.orbits.len(),
            s.mass()
        );
    }
    println!("  mass {} = average {}", d.groupoid_mass(), action.element_averaged_mass());
    println!("  dim C = {}", d.function_space().len());
    Ok(())
}

fn main() -> greenfn::Result<()> {
    let s4 = FiniteGroup::symmetric(4)?;
    show(&FiniteActionWithFrobenius::point(FiniteGroupWithAutomorphism::identity(s4.clone())))?;
    show(&FiniteActionWithFrobenius::self_conjugation(FiniteGroupWithAutomorphism::identity(
        FiniteGroup::symmetric(3)?,
    )))?;
    show(&FiniteActionWithFrobenius::point(FiniteGroupWithAutomorphism::inversion(
        FiniteGroup::cyclic(3)?,
    )?))?;
    show(&FiniteActionWithFrobenius::self_translation(FiniteGroupWithAutomorphism::conjugation(
        FiniteGroup::dihedral(4)?,
        1,
    )?))?;
    Ok(())
}
