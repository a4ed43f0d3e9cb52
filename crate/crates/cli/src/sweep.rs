//! Multi-threaded pair sweep over outer-code chunks.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use qrz9_core::engine::{merge, SweepPlan};
use qrz9_core::WeightDistribution;

/// Chunks per worker; more chunks balance better at a small merge cost.
const CHUNKS_PER_THREAD: usize = 16;

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs `plan` on `threads` workers pulling chunks from a shared counter.
/// Chunk histograms are merged in chunk order, so the result does not depend
/// on the thread count or scheduling.
pub fn parallel_sweep(plan: &SweepPlan, threads: usize, progress: bool) -> WeightDistribution {
    let threads = threads.max(1);
    let chunks = plan.chunks(threads * CHUNKS_PER_THREAD);
    let results: Mutex<Vec<Option<Vec<u64>>>> = Mutex::new(vec![None; chunks.len()]);
    let next = AtomicUsize::new(0);
    let done = AtomicUsize::new(0);
    let start = Instant::now();
    std::thread::scope(|s| {
        for _ in 0..threads.min(chunks.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(range) = chunks.get(i) else { break };
                let hist = plan.run_chunk(range.clone());
                results.lock().expect("no worker panicked")[i] = Some(hist);
                let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
                if progress {
                    let secs = start.elapsed().as_secs_f64();
                    let eta = secs / finished as f64 * (chunks.len() - finished) as f64;
                    eprintln!("sweep: chunk {finished}/{} done, {secs:.0}s elapsed, ~{eta:.0}s left", chunks.len());
                }
            });
        }
    });
    let hists = results.into_inner().expect("no worker panicked").into_iter().map(|h| h.expect("every chunk ran"));
    merge(plan.image_length(), hists)
}
