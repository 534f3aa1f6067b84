#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace lts {

// Worker count for enumeration-heavy checks: LTS_THREADS when set to a
// positive integer, otherwise the hardware concurrency (at least 1).
unsigned worker_count();

// Outcome of scanning one chunk of an ordered candidate space.
template <class Witness>
struct ChunkScan {
  std::optional<Witness> failure;  // first failing candidate inside the chunk
  std::size_t examined = 0;        // candidates examined up to and including it
};

template <class Witness>
struct OrderedScan {
  std::optional<Witness> failure;
  std::size_t examined = 0;
};

// Scans chunks 0..chunk_count-1 of a candidate space whose global order is
// chunk order followed by in-chunk order. Returns the globally first failure
// and the number of candidates preceding it (inclusive). The result does not
// depend on the number of workers: chunks past an already failing chunk are
// skipped, chunks before it always run to completion.
template <class Witness, class ScanChunk>
OrderedScan<Witness> first_failure(std::size_t chunk_count, ScanChunk&& scan_chunk) {
  std::vector<std::optional<ChunkScan<Witness>>> results(chunk_count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failed{chunk_count};

  auto work = [&] {
    for (;;) {
      std::size_t chunk = next.fetch_add(1);
      if (chunk >= chunk_count || chunk > first_failed.load()) return;
      ChunkScan<Witness> r = scan_chunk(chunk);
      if (r.failure) {
        std::size_t seen = first_failed.load();
        while (chunk < seen && !first_failed.compare_exchange_weak(seen, chunk)) {
        }
      }
      results[chunk] = std::move(r);
    }
  };

  unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(chunk_count, 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  OrderedScan<Witness> out;
  for (std::size_t chunk = 0; chunk < chunk_count; ++chunk) {
    auto& r = results[chunk];
    out.examined += r->examined;
    if (r->failure) {
      out.failure = std::move(r->failure);
      break;
    }
  }
  return out;
}

// Runs body(i) for every i in [0, count) across the worker pool.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
  };
  unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
}

}  // namespace lts
