//! Almost simple groups realized as permutation groups.

use classifier::GroupSpec;
use permgroup::{rng_from_seed, PermGroup, DEFAULT_SEED};

use crate::error::CatalogError;
use crate::models::build_model;

/// `T ≤ G` as permutation groups on the same points, with the `GroupSpec` they realize.
#[derive(Debug, Clone)]
pub struct GroupInstance {
    pub name: String,
    pub spec: GroupSpec,
    pub group: PermGroup,
    pub socle: PermGroup,
}

impl GroupInstance {
    pub fn degree(&self) -> usize {
        self.group.degree()
    }
}

fn check_order(
    name: &str,
    what: &str,
    g: &PermGroup,
    expected: &num_bigint::BigUint,
) -> Result<(), CatalogError> {
    if g.order() != expected {
        return Err(CatalogError::OrderMismatch {
            name: format!("{name} ({what})"),
            expected: expected.to_string(),
            got: g.order().to_string(),
        });
    }
    Ok(())
}

/// Models with more generators than this are regenerated by random elements.
const MAX_GENERATORS: usize = 3;
const GENERATING_TRIES: usize = 64;

/// The same group on at most `MAX_GENERATORS` generators when a seeded
/// search finds such a set, since every orbit computation scales with the
/// number of generators.
fn few_generators(g: PermGroup) -> Result<PermGroup, CatalogError> {
    if g.generators().len() <= MAX_GENERATORS {
        return Ok(g);
    }
    let mut rng = rng_from_seed(DEFAULT_SEED);
    for attempt in 0..GENERATING_TRIES {
        let k = if attempt < GENERATING_TRIES / 2 {
            2
        } else {
            MAX_GENERATORS
        };
        let gens: Vec<_> = (0..k).map(|_| g.random_element(&mut rng)).collect();
        let h = PermGroup::new(g.degree(), gens)?;
        if h.order() == g.order() {
            return Ok(h);
        }
    }
    Ok(g)
}

/// Builds `G` and `T` and checks both orders against the order formulas.
pub fn build(spec: &GroupSpec) -> Result<GroupInstance, CatalogError> {
    let model = build_model(spec)?;
    let name = spec.name();
    let socle = PermGroup::new(model.degree, model.socle.clone())?;
    check_order(&name, "socle", &socle, &spec.socle_order())?;
    let mut gens = model.socle;
    gens.extend(model.outer);
    let group = PermGroup::new(model.degree, gens)?;
    check_order(&name, "group", &group, &spec.order())?;
    let group = few_generators(group)?;
    let socle = few_generators(socle)?;
    Ok(GroupInstance {
        name,
        spec: spec.clone(),
        group,
        socle,
    })
}

/// Parses a group name and builds it.
pub fn build_named(name: &str) -> Result<GroupInstance, CatalogError> {
    build(&GroupSpec::parse(name)?)
}
