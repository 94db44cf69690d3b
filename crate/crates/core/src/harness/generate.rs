//! Deterministic coloring generators.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::colors::Color;
use crate::error::{Error, Result};
use crate::hypercore::{Coloring, EdgeIndexer, HyperParams};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Uniform(Color),
    /// Independent uniform colors from a ChaCha8 stream.
    Random { seed: u64 },
    /// `labels[v]` is the class (and color) of vertex `v`; an edge takes the
    /// class of its minimum vertex.
    VertexPartition { labels: Vec<Color> },
    /// Repeated cyclically over colex order.
    Digits(Vec<Color>),
}

fn check(params: &HyperParams, c: Color) -> Result<()> {
    if c == 0 || c > params.k() {
        return Err(Error::InvalidScheme(format!("color {c} outside 1..={}", params.k())));
    }
    Ok(())
}

pub fn gen_coloring(params: &HyperParams, scheme: &Scheme) -> Result<Coloring> {
    let m = params.edge_count() as usize;
    let colors: Vec<Color> = match scheme {
        Scheme::Uniform(c) => {
            check(params, *c)?;
            alloc::vec![*c; m]
        }
        Scheme::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..m).map(|_| rng.gen_range(1..=params.k())).collect()
        }
        Scheme::VertexPartition { labels } => {
            if labels.len() != params.n() {
                return Err(Error::InvalidScheme(format!("{} labels for {} vertices", labels.len(), params.n())));
            }
            for &c in labels {
                check(params, c)?;
            }
            let indexer = EdgeIndexer::new(*params);
            let mut out = Vec::with_capacity(m);
            let mut scratch = Vec::new();
            for e in 0..m as u64 {
                indexer.unrank_into(e, &mut scratch);
                out.push(labels[scratch[0]]);
            }
            out
        }
        Scheme::Digits(d) => {
            if d.is_empty() {
                return Err(Error::InvalidScheme("empty digit string".into()));
            }
            for &c in d {
                check(params, c)?;
            }
            d.iter().copied().cycle().take(m).collect()
        }
    };
    Coloring::new(*params, colors)
}
