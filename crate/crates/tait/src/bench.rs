//! Random genus-0 workloads for `tait bench`.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use tait_core::tft::evaluate_closed_with_stats;
use tait_core::{count_colorings, random_bridgeless_map, reslice_distinct, seeded, slice, EmbeddedGraph};

use crate::verify::BatteryError;

/// Up to this many vertices the count is also checked by enumeration;
/// above it, against a second slicing.
pub const ORACLE_MAX_VERTICES: usize = 16;

#[derive(Clone, Debug)]
pub struct Sample {
    pub index: usize,
    pub vertices: usize,
    pub count: BigUint,
    pub width: usize,
    pub layers: usize,
    pub peak_support: usize,
    pub agree: bool,
    pub by_oracle: bool,
    pub elapsed: Duration,
}

/// The deterministic part; timing is left out so stdout is reproducible.
impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sample {}: vertices {} count {} width {} layers {} peak_support {} agree {} ({})",
            self.index,
            self.vertices,
            self.count,
            self.width,
            self.layers,
            self.peak_support,
            if self.agree { "yes" } else { "no" },
            if self.by_oracle { "oracle" } else { "reslice" },
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BenchError {
    #[error("InvalidArgument: vertex count must be even and at least 4, got {0}")]
    OddVertices(usize),
    #[error(transparent)]
    Battery(#[from] BatteryError),
}

/// The bridgeless random maps a bench run with this seed visits, in order.
pub fn sample_maps(vertices: usize, samples: usize, rng_seed: u64) -> Result<Vec<EmbeddedGraph>, BenchError> {
    if vertices < 4 || vertices % 2 == 1 {
        return Err(BenchError::OddVertices(vertices));
    }
    let mut rng = seeded(rng_seed);
    Ok((0..samples).map(|_| random_bridgeless_map(&mut rng, vertices)).collect())
}

/// Slice and count one map, recording the peak state support.
pub fn measure(index: usize, g: &EmbeddedGraph) -> Result<Sample, BatteryError> {
    let start = Instant::now();
    let w = slice(g)?;
    let (count, stats) = evaluate_closed_with_stats(&w)?;
    let elapsed = start.elapsed();
    let by_oracle = g.num_vertices() <= ORACLE_MAX_VERTICES;
    let agree = if by_oracle {
        BigUint::from(count_colorings(g)) == count
    } else {
        evaluate_closed_with_stats(&reslice_distinct(g, 1)?)?.0 == count
    };
    Ok(Sample {
        index,
        vertices: g.num_vertices(),
        count,
        width: w.max_width(),
        layers: w.len(),
        peak_support: stats.peak_support,
        agree,
        by_oracle,
        elapsed,
    })
}

pub fn run(vertices: usize, samples: usize, rng_seed: u64) -> Result<Vec<Sample>, BenchError> {
    let maps = sample_maps(vertices, samples, rng_seed)?;
    maps.iter().enumerate().map(|(i, g)| measure(i, g).map_err(BenchError::from)).collect()
}
