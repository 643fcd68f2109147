//! Doubling experiment for the chordal LexDFS⁺ pipeline against the naive
//! label simulation.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::chordal::lexdfs_plus_chordal;
use crate::error::{Error, Result};
use crate::oracle::naive_lexdfs_plus;
use crate::testkit::{bench_family, gen_rho};

/// Allowed time growth per doubling of `n + m`.
pub const DOUBLING_FACTOR_LIMIT: f64 = 2.5;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub k: usize,
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub repeats: usize,
    /// The naive oracle only runs on sizes up to this bound.
    pub naive_max_n: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            k: 8,
            sizes: (10..=17).map(|e| 1usize << e).collect(),
            seed: 1,
            repeats: 5,
            naive_max_n: 1 << 12,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub fast: Duration,
    pub naive: Option<Duration>,
}

impl BenchRow {
    pub fn size(&self) -> usize {
        self.n + self.m
    }
}

/// Growth between two consecutive rows.
#[derive(Debug, Clone)]
pub struct Growth {
    pub size_factor: f64,
    pub fast_factor: f64,
    /// `DOUBLING_FACTOR_LIMIT ^ log2(size_factor)`.
    pub fast_limit: f64,
    pub naive_factor: Option<f64>,
}

impl Growth {
    pub fn fast_ok(&self) -> bool {
        self.fast_factor <= self.fast_limit
    }
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub growth: Vec<Growth>,
}

impl BenchReport {
    /// Every step's fast growth is within its limit.
    pub fn linear(&self) -> bool {
        self.growth.iter().all(Growth::fast_ok)
    }

    /// At the largest step where both were timed, the naive oracle grows
    /// strictly faster than the fast path. `None` if no such step exists.
    pub fn naive_steeper(&self) -> Option<bool> {
        self.growth
            .iter()
            .rev()
            .find_map(|g| g.naive_factor.map(|nf| nf > g.fast_factor))
    }

    pub fn table(&self) -> String {
        let mut out = String::from("n m t_fast t_naive ratio\n");
        for row in &self.rows {
            let fast = row.fast.as_secs_f64();
            let (naive, ratio) = match row.naive {
                Some(t) => (
                    format!("{:.6}", t.as_secs_f64()),
                    format!("{:.1}", t.as_secs_f64() / fast),
                ),
                None => ("-".into(), "-".into()),
            };
            let _ = writeln!(out, "{} {} {:.6} {} {}", row.n, row.m, fast, naive, ratio);
        }
        for g in &self.growth {
            let naive = g
                .naive_factor
                .map_or_else(|| "-".into(), |f| format!("{f:.2}"));
            let _ = writeln!(
                out,
                "# growth size x{:.2}: fast x{:.2} (limit {:.2}), naive x{}",
                g.size_factor, g.fast_factor, g.fast_limit, naive
            );
        }
        out
    }
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    samples[samples.len() / 2]
}

const MIN_SAMPLE: Duration = Duration::from_millis(20);

/// Median per-call time over `repeats` samples, each a batch of calls lasting
/// at least [`MIN_SAMPLE`].
fn time<F: FnMut()>(repeats: usize, mut f: F) -> Duration {
    let t = Instant::now();
    f();
    let once = t.elapsed().max(Duration::from_nanos(1));
    let batch = (MIN_SAMPLE.as_nanos() / once.as_nanos()).clamp(1, 1 << 20) as u32;
    median(
        (0..repeats)
            .map(|_| {
                let t = Instant::now();
                for _ in 0..batch {
                    f();
                }
                t.elapsed() / batch
            })
            .collect(),
    )
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    if config.repeats == 0 {
        return Err(Error::InvalidParameters("repeats must be positive".into()));
    }
    let family = bench_family(config.k, &config.sizes, config.seed)?;
    let mut rows = Vec::with_capacity(family.len());
    for (i, graph) in family.iter().enumerate() {
        let start = 0;
        let rho = gen_rho(graph, start, config.seed.wrapping_add(1000 + i as u64))?;
        // warm-up, also surfaces errors outside the timed region
        let expected = lexdfs_plus_chordal(graph, start, &rho)?;
        let fast = time(config.repeats, || {
            let out = lexdfs_plus_chordal(graph, start, &rho).expect("warm-up succeeded");
            assert_eq!(out.len(), expected.len());
        });
        let naive = if graph.n() <= config.naive_max_n {
            let reference = naive_lexdfs_plus(graph, &rho)?;
            debug_assert_eq!(reference, expected);
            Some(time(config.repeats, || {
                naive_lexdfs_plus(graph, &rho).expect("checked above");
            }))
        } else {
            None
        };
        rows.push(BenchRow {
            n: graph.n(),
            m: graph.m(),
            fast,
            naive,
        });
    }
    let growth = rows
        .windows(2)
        .map(|w| {
            let size_factor = w[1].size() as f64 / w[0].size() as f64;
            let secs = |d: Duration| d.as_secs_f64().max(1e-9);
            Growth {
                size_factor,
                fast_factor: secs(w[1].fast) / secs(w[0].fast),
                fast_limit: DOUBLING_FACTOR_LIMIT.powf(size_factor.log2()),
                naive_factor: match (w[0].naive, w[1].naive) {
                    (Some(a), Some(b)) => Some(secs(b) / secs(a)),
                    _ => None,
                },
            }
        })
        .collect();
    Ok(BenchReport { rows, growth })
}
