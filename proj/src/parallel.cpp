#include "msseg/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace msseg {

namespace {

int g_threads = 0;  // 0 = not initialized yet

int resolve_env_threads() {
  if (const char* env = std::getenv("MSSEG_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

// Persistent pool; workers sleep between generations. The pool is only
// started once more than one thread is requested.
class Pool {
 public:
  explicit Pool(int workers) : stop_(false), generation_(0), pending_(0) {
    for (int i = 0; i < workers; ++i)
      threads_.emplace_back([this, i] { worker_loop(i + 1); });
  }

  ~Pool() {
    {
      std::unique_lock<std::mutex> lk(mu_);
      stop_ = true;
      ++generation_;
    }
    cv_.notify_all();
    for (auto& t : threads_) t.join();
  }

  int workers() const { return static_cast<int>(threads_.size()); }

  // Runs fn(chunk) for chunk = 0..chunks-1; chunk 0 executes on the caller.
  void run(int chunks, const std::function<void(int)>& fn) {
    {
      std::unique_lock<std::mutex> lk(mu_);
      task_ = &fn;
      task_chunks_ = chunks;
      pending_ = chunks - 1;
      ++generation_;
    }
    if (chunks > 1) cv_.notify_all();
    fn(0);
    if (chunks > 1) {
      std::unique_lock<std::mutex> lk(mu_);
      done_cv_.wait(lk, [this] { return pending_ == 0; });
    }
    task_ = nullptr;
  }

 private:
  void worker_loop(int id) {
    long seen = 0;
    for (;;) {
      const std::function<void(int)>* task = nullptr;
      int chunks = 0;
      {
        std::unique_lock<std::mutex> lk(mu_);
        cv_.wait(lk, [&] { return stop_ || generation_ != seen; });
        seen = generation_;
        if (stop_) return;
        task = task_;
        chunks = task_chunks_;
      }
      if (task && id < chunks) {
        (*task)(id);
        std::unique_lock<std::mutex> lk(mu_);
        if (--pending_ == 0) done_cv_.notify_all();
      }
    }
  }

  std::mutex mu_;
  std::condition_variable cv_;
  std::condition_variable done_cv_;
  std::vector<std::thread> threads_;
  bool stop_;
  long generation_;
  const std::function<void(int)>* task_ = nullptr;
  int task_chunks_ = 0;
  int pending_;
};

Pool* g_pool = nullptr;

void ensure_pool(int workers) {
  if (g_pool && g_pool->workers() >= workers) return;
  delete g_pool;
  g_pool = new Pool(workers);
}

}  // namespace

void set_threads(int n) {
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  g_threads = n;
  if (n > 1) ensure_pool(n - 1);
}

int thread_count() {
  if (g_threads == 0) set_threads(resolve_env_threads());
  return g_threads;
}

int max_chunks() { return thread_count(); }

void parallel_rows(int rows, const std::function<void(int, int, int)>& fn) {
  const int n = std::min(thread_count(), rows);
  if (n <= 1) {
    fn(0, rows, 0);
    return;
  }
  auto task = [&](int chunk) {
    const int y0 = static_cast<int>(static_cast<long>(rows) * chunk / n);
    const int y1 = static_cast<int>(static_cast<long>(rows) * (chunk + 1) / n);
    if (y0 < y1) fn(y0, y1, chunk);
  };
  g_pool->run(n, task);
}

}  // namespace msseg
