use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;

use super::{symmetric_generators, GroupOracle, WordError};

/// Order in which a frontier is expanded. The resulting table does not
/// depend on it; the option exists so that independence can be tested.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FrontierOrder {
    #[default]
    Sorted,
    Reversed,
    Shuffled(u64),
}

#[derive(Clone, Debug)]
pub struct BfsOptions {
    pub node_cap: usize,
    /// `None` or `Some(1)` expands sequentially.
    pub threads: Option<usize>,
    pub order: FrontierOrder,
}

impl Default for BfsOptions {
    fn default() -> Self {
        Self { node_cap: 1_000_000, threads: None, order: FrontierOrder::Sorted }
    }
}

impl BfsOptions {
    pub fn with_cap(node_cap: usize) -> Self {
        Self { node_cap, ..Self::default() }
    }
}

type Frontier<O> = Vec<(<O as GroupOracle>::Key, <O as GroupOracle>::Elem)>;

/// All elements of word length `≤ radius`, keyed canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyBall<K: std::hash::Hash + Eq> {
    pub radius: u32,
    table: HashMap<K, u32>,
    sphere_sizes: Vec<usize>,
}

impl<K: std::hash::Hash + Eq + Ord + Clone> CayleyBall<K> {
    pub fn length(&self, key: &K) -> Option<u32> {
        self.table.get(key).copied()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// Number of elements at exactly distance `r`, for `r = 0..=radius`.
    pub fn sphere_sizes(&self) -> &[usize] {
        &self.sphere_sizes
    }

    /// Cumulative ball sizes for `r = 0..=radius`.
    pub fn ball_sizes(&self) -> Vec<usize> {
        self.sphere_sizes
            .iter()
            .scan(0, |acc, s| {
                *acc += s;
                Some(*acc)
            })
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, u32)> {
        self.table.iter().map(|(k, &v)| (k, v))
    }

    /// Entries sorted by key; two balls are equal iff these agree.
    pub fn sorted_entries(&self) -> Vec<(K, u32)> {
        let mut v: Vec<_> = self.table.iter().map(|(k, &d)| (k.clone(), d)).collect();
        v.sort();
        v
    }
}

pub fn cayley_ball<O: GroupOracle>(
    oracle: &O,
    radius: u32,
    node_cap: usize,
) -> Result<CayleyBall<O::Key>, WordError> {
    cayley_ball_with(oracle, radius, &BfsOptions::with_cap(node_cap))
}

/// Frontier-by-frontier breadth-first search from the identity.
///
/// Each level's candidates are sorted and deduplicated by key before they
/// are merged, so the table is identical for every thread count and
/// frontier order.
pub fn cayley_ball_with<O: GroupOracle>(
    oracle: &O,
    radius: u32,
    opts: &BfsOptions,
) -> Result<CayleyBall<O::Key>, WordError> {
    if opts.node_cap == 0 {
        return Err(WordError::InvalidArgument("node_cap must be positive".into()));
    }
    let letters = symmetric_generators(oracle)?;
    let pool = match opts.threads {
        Some(t) if t > 1 => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| WordError::InvalidArgument(e.to_string()))?,
        ),
        _ => None,
    };

    let id = oracle.identity();
    let mut table = HashMap::new();
    table.insert(oracle.key(&id), 0u32);
    let mut sphere_sizes = vec![1usize];
    let mut frontier = vec![(oracle.key(&id), id)];

    for r in 1..=radius {
        order_frontier(&mut frontier, opts.order);
        let expand = |(_, e): &(O::Key, O::Elem)| -> Result<Frontier<O>, WordError> {
            letters
                .iter()
                .map(|(_, g)| {
                    let p = oracle.multiply(e, g)?;
                    Ok((oracle.key(&p), p))
                })
                .collect()
        };
        let batches: Vec<Vec<(O::Key, O::Elem)>> = match &pool {
            Some(pool) => pool.install(|| frontier.par_iter().map(expand).collect::<Result<_, _>>())?,
            None => frontier.iter().map(expand).collect::<Result<_, _>>()?,
        };
        let mut next: Vec<(O::Key, O::Elem)> = batches
            .into_iter()
            .flatten()
            .filter(|(k, _)| !table.contains_key(k))
            .collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        next.dedup_by(|a, b| a.0 == b.0);

        if table.len() + next.len() > opts.node_cap {
            return Err(WordError::BallTooLarge {
                radius_reached: r - 1,
                nodes: table.len(),
                sphere_sizes,
            });
        }
        for (k, _) in &next {
            table.insert(k.clone(), r);
        }
        sphere_sizes.push(next.len());
        frontier = next;
    }
    Ok(CayleyBall { radius, table, sphere_sizes })
}

fn order_frontier<K: Ord, E>(frontier: &mut [(K, E)], order: FrontierOrder) {
    match order {
        FrontierOrder::Sorted => frontier.sort_by(|a, b| a.0.cmp(&b.0)),
        FrontierOrder::Reversed => frontier.sort_by(|a, b| b.0.cmp(&a.0)),
        FrontierOrder::Shuffled(seed) => {
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            frontier.shuffle(&mut rng);
        }
    }
}

/// Exact Cayley-graph distance from the identity to `target`, or `None`
/// when it exceeds `radius`.
pub fn word_length_exact<O: GroupOracle>(
    oracle: &O,
    target: &O::Elem,
    radius: u32,
    node_cap: usize,
) -> Result<Option<u32>, WordError> {
    let key = oracle.key(target);
    if key == oracle.key(&oracle.identity()) {
        return Ok(Some(0));
    }
    let ball = cayley_ball(oracle, radius, node_cap)?;
    Ok(ball.length(&key))
}
