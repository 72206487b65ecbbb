#include "cox/tits.hpp"

#include <deque>
#include <set>

namespace cox {

namespace {

// Index of an adjacent equal pair, or -1.
int nil_position(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return static_cast<int>(i);
  return -1;
}

}  // namespace

Word tits_normal_form(const CoxeterMatrix& m, Word w, std::size_t state_cap) {
  for (int c : w)
    if (c < 0 || c >= m.rank()) throw precondition_error("tits_normal_form: letter out of range");

  while (true) {
    // Fast path: cancel an adjacent ss pair if one is already visible.
    const int p = nil_position(w);
    if (p >= 0) {
      w.erase(w.begin() + p, w.begin() + p + 2);
      continue;
    }
    // Explore the braid closure at the current length, looking for any
    // representative with a visible ss pair.
    std::set<Word> seen{w};
    std::deque<Word> queue{w};
    bool reduced_further = false;
    while (!queue.empty()) {
      Word cur = queue.front();
      queue.pop_front();
      for (size_t i = 0; i + 1 < cur.size(); ++i) {
        const int a = cur[i], b = cur[i + 1];
        const int ord = m.order(a, b);
        if (ord == 0 || ord < 2) continue;
        // Need the alternating run a b a b ... of length ord starting at i.
        if (i + ord > cur.size()) continue;
        bool run = true;
        for (int k = 0; k < ord; ++k)
          if (cur[i + k] != ((k % 2 == 0) ? a : b)) { run = false; break; }
        if (!run) continue;
        Word next = cur;
        for (int k = 0; k < ord; ++k) next[i + k] = (k % 2 == 0) ? b : a;
        if (seen.insert(next).second) {
          if (nil_position(next) >= 0) {
            w = next;
            reduced_further = true;
            break;
          }
          if (seen.size() > state_cap)
            throw resource_error("tits_normal_form: braid closure exceeded state cap",
                                 static_cast<int>(state_cap));
          queue.push_back(std::move(next));
        }
      }
      if (reduced_further) break;
    }
    if (reduced_further) continue;
    // No representative reduces: the word is reduced and `seen` holds every
    // reduced expression; return the ShortLex-least one.
    return *seen.begin();
  }
}

}  // namespace cox
