#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "polymc/checker.hpp"
#include "polymc/error.hpp"

namespace polymc {

namespace {

class Runner {
 public:
  Runner(const KripkeModel& m, const TaskGraph& g) : m_(m), g_(g), out_(g.size()) {}

  // Evaluates node `id`; every child must already be settled.
  void execute(NodeId id) {
    const TaskNode& node = g_.node(id);
    NodeResult& r = out_[id];
    std::vector<const SatSet*> inputs;
    for (NodeId c : node.children) {
      if (out_[c].status != NodeStatus::Done) {
        r.status = NodeStatus::Cancelled;
        r.error = "input not available: " + g_.formula(c).to_string();
        return;
      }
      inputs.push_back(&*out_[c].value);
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      r.value = eval_node(m_, node, inputs);
      r.status = NodeStatus::Done;
    } catch (const std::exception& e) {
      r.status = NodeStatus::Failed;
      r.error = g_.formula(id).to_string() + ": " + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  void sequential() {
    for (NodeId id = 0; id < g_.size(); ++id) execute(id);
  }

  void parallel(unsigned workers) {
    const auto dependents = g_.dependents();
    std::vector<std::size_t> pending(g_.size());
    std::vector<NodeId> ready;
    for (NodeId id = 0; id < g_.size(); ++id) {
      const auto& ch = g_.node(id).children;
      // A node may use the same child twice (e.g. a & a); count it once.
      pending[id] = ch.size() == 2 && ch[0] == ch[1] ? 1 : ch.size();
      if (pending[id] == 0) ready.push_back(id);
    }
    std::size_t remaining = g_.size();
    std::mutex mu;
    std::condition_variable cv;

    auto work = [&] {
      std::unique_lock lock(mu);
      while (true) {
        cv.wait(lock, [&] { return !ready.empty() || remaining == 0; });
        if (remaining == 0) return;
        // Lowest id first keeps the schedule close to the sequential order.
        auto it = std::min_element(ready.begin(), ready.end());
        NodeId id = *it;
        ready.erase(it);
        lock.unlock();
        execute(id);
        lock.lock();
        for (NodeId d : dependents[id]) {
          if (--pending[d] == 0) ready.push_back(d);
        }
        --remaining;
        cv.notify_all();
      }
    };

    std::vector<std::thread> threads;
    for (unsigned i = 1; i < workers; ++i) threads.emplace_back(work);
    work();
    for (std::thread& t : threads) t.join();
  }

  std::vector<NodeResult> take() { return std::move(out_); }

 private:
  const KripkeModel& m_;
  const TaskGraph& g_;
  std::vector<NodeResult> out_;
};

}  // namespace

CheckResults run(const KripkeModel& m, const TaskGraph& graph, RunOptions options) {
  if (options.workers == 0) throw Error(ErrorKind::InvalidArgument, "worker count must be at least 1");
  Runner runner(m, graph);
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(options.workers, std::max<std::size_t>(graph.size(), 1)));
  if (workers <= 1) {
    runner.sequential();
  } else {
    runner.parallel(workers);
  }
  CheckResults results;
  results.nodes = runner.take();
  for (const auto& [label, id] : graph.roots()) results.saves.push_back({label, id});
  return results;
}

}  // namespace polymc
