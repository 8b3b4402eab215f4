#include "skein/tangle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace skein {

namespace {

[[noreturn]] void malformed(const std::string& msg) {
  throw SkeinError(ErrorCode::MalformedWord, msg);
}

// acc followed by one physical crossing at x.
TLMorphism apply_crossing(const TLMorphism& acc, int x, bool over) {
  const Ring& ring = acc.ring();
  const int W = acc.target();
  auto e = pad(e_generator(ring, 2, 0), x, W - x - 2);
  CycScalar vert = ring.v_power(over ? 1 : -1);
  CycScalar horiz = ring.v_power(over ? -1 : 1);
  return acc.scaled(vert) + compose(acc, e).scaled(horiz);
}

// acc followed by the a x b block at physical position x.
TLMorphism apply_block(TLMorphism acc, int x, int a, int b, bool over) {
  for (int i = a - 1; i >= 0; --i)
    for (int j = 0; j < b; ++j) acc = apply_crossing(acc, x + i + j, over);
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- word building

TangleWord::TangleWord(std::vector<int> bottom_widths) {
  for (int w : bottom_widths) {
    if (w < 0) malformed("negative strand width");
    bottom_.push_back(new_component(w, false));
  }
  current_ = bottom_;
}

int TangleWord::find(int c) const {
  while (parent_[c] != c) c = parent_[c];
  return c;
}

int TangleWord::new_component(int width, bool green) {
  int id = static_cast<int>(parent_.size());
  parent_.push_back(id);
  comp_width_.push_back(width);
  comp_green_.push_back(green);
  comp_boxed_.push_back(0);
  return id;
}

void TangleWord::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (comp_width_[a] != comp_width_[b]) malformed("joined strands have different widths");
  parent_[b] = a;
  comp_green_[a] = comp_green_[a] || comp_green_[b];
  comp_boxed_[a] = comp_boxed_[a] || comp_boxed_[b];
}

TangleWord& TangleWord::cup(int pos, int width, bool green) {
  if (pos < 0 || pos > logical_count()) malformed("cup position out of range");
  if (width < 0) malformed("negative cup width");
  int c = new_component(width, green);
  current_.insert(current_.begin() + pos, {c, c});
  slices_.push_back({SliceKind::Cup, pos, 2, width, nullptr, ""});
  cup_component_.push_back(c);
  return *this;
}

TangleWord& TangleWord::cap(int pos) {
  if (pos < 0 || pos + 1 >= logical_count()) malformed("cap position out of range");
  unite(current_[pos], current_[pos + 1]);
  current_.erase(current_.begin() + pos, current_.begin() + pos + 2);
  slices_.push_back({SliceKind::Cap, pos, 2, 1, nullptr, ""});
  cup_component_.push_back(-1);
  return *this;
}

TangleWord& TangleWord::over(int pos) {
  if (pos < 0 || pos + 1 >= logical_count()) malformed("crossing position out of range");
  std::swap(current_[pos], current_[pos + 1]);
  slices_.push_back({SliceKind::Over, pos, 2, 1, nullptr, ""});
  cup_component_.push_back(-1);
  return *this;
}

TangleWord& TangleWord::under(int pos) {
  if (pos < 0 || pos + 1 >= logical_count()) malformed("crossing position out of range");
  std::swap(current_[pos], current_[pos + 1]);
  slices_.push_back({SliceKind::Under, pos, 2, 1, nullptr, ""});
  cup_component_.push_back(-1);
  return *this;
}

TangleWord& TangleWord::box(int pos, int span, TLMorphism morphism, std::string label) {
  if (pos < 0 || span < 0 || pos + span > logical_count()) malformed("box span out of range");
  if (morphism.source() != morphism.target()) malformed("box must be an endomorphism");
  int w = 0;
  for (int i = pos; i < pos + span; ++i) {
    w += comp_width_[find(current_[i])];
    comp_boxed_[find(current_[i])] = 1;
  }
  if (w != morphism.source())
    malformed("box '" + label + "' has " + std::to_string(morphism.source()) +
              " strands but spans physical width " + std::to_string(w));
  slices_.push_back({SliceKind::Box, pos, span, 1,
                     std::make_shared<const TLMorphism>(std::move(morphism)), std::move(label)});
  cup_component_.push_back(-1);
  return *this;
}

TangleWord& TangleWord::then(const TangleWord& upper) {
  if (upper.bottom_.size() != current_.size()) malformed("stacked words have different widths");
  const int off = static_cast<int>(parent_.size());
  for (size_t c = 0; c < upper.parent_.size(); ++c) {
    parent_.push_back(upper.parent_[c] + off);
    comp_width_.push_back(upper.comp_width_[c]);
    comp_green_.push_back(upper.comp_green_[c]);
    comp_boxed_.push_back(upper.comp_boxed_[c]);
  }
  for (size_t i = 0; i < current_.size(); ++i) unite(current_[i], upper.bottom_[i] + off);
  for (size_t s = 0; s < upper.slices_.size(); ++s) {
    slices_.push_back(upper.slices_[s]);
    cup_component_.push_back(upper.cup_component_[s] < 0 ? -1 : upper.cup_component_[s] + off);
  }
  current_.clear();
  for (int c : upper.current_) current_.push_back(c + off);
  return *this;
}

int TangleWord::bottom_physical() const {
  int w = 0;
  for (int c : bottom_) w += comp_width_[find(c)];
  return w;
}

int TangleWord::top_physical() const {
  int w = 0;
  for (int c : current_) w += comp_width_[find(c)];
  return w;
}

int TangleWord::component_of_cup(int slice_index) const {
  if (slice_index < 0 || slice_index >= static_cast<int>(slices_.size()) ||
      cup_component_[slice_index] < 0)
    throw SkeinError(ErrorCode::InvalidArgument, "slice is not a cup");
  return find(cup_component_[slice_index]);
}

int TangleWord::component_of_bottom(int i) const {
  if (i < 0 || i >= static_cast<int>(bottom_.size()))
    throw SkeinError(ErrorCode::IndexOutOfRange, "bottom strand out of range");
  return find(bottom_[i]);
}

std::vector<ComponentInfo> TangleWord::components() const {
  std::vector<char> open(parent_.size(), 0);
  for (int c : bottom_) open[find(c)] = 1;
  for (int c : current_) open[find(c)] = 1;
  std::vector<ComponentInfo> out;
  for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
    if (find(c) != c) continue;
    out.push_back({c, !open[c], static_cast<bool>(comp_boxed_[c]), static_cast<bool>(comp_green_[c]),
                   comp_width_[c]});
  }
  return out;
}

void TangleWord::mark_green(int component, bool green) {
  if (component < 0 || component >= static_cast<int>(parent_.size()))
    throw SkeinError(ErrorCode::InvalidArgument, "unknown component");
  comp_green_[find(component)] = green;
}

TangleWord TangleWord::with_width(int component, int width) const {
  if (component < 0 || component >= static_cast<int>(parent_.size()))
    throw SkeinError(ErrorCode::NotAClosedComponent, "unknown component");
  int root = find(component);
  for (const auto& info : components()) {
    if (info.id != root) continue;
    if (!info.closed)
      throw SkeinError(ErrorCode::NotAClosedComponent,
                       "component " + std::to_string(component) + " has boundary endpoints");
    if (info.boxed)
      throw SkeinError(ErrorCode::NotAClosedComponent,
                       "component " + std::to_string(component) + " passes through a box");
  }
  if (width < 0) throw SkeinError(ErrorCode::InvalidArgument, "negative width");
  TangleWord w = *this;
  w.comp_width_[root] = width;
  return w;
}

std::string TangleWord::to_string() const {
  std::ostringstream os;
  os << "word(" << bottom_.size() << ")";
  for (const auto& s : slices_) {
    switch (s.kind) {
      case SliceKind::Cup: os << " cup(" << s.pos << ")"; break;
      case SliceKind::Cap: os << " cap(" << s.pos << ")"; break;
      case SliceKind::Over: os << " over(" << s.pos << ")"; break;
      case SliceKind::Under: os << " under(" << s.pos << ")"; break;
      case SliceKind::Box: os << " box[" << s.label << "](" << s.pos << "," << s.span << ")"; break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- resolution

TLMorphism resolve(const TangleWord& word, const Ring& ring) {
  std::vector<int> level = word.bottom_;
  auto width = [&](int c) { return word.comp_width_[word.find(c)]; };
  auto offset = [&](int pos) {
    int x = 0;
    for (int i = 0; i < pos; ++i) x += width(level[i]);
    return x;
  };
  TLMorphism acc = identity(ring, word.bottom_physical());
  for (size_t s = 0; s < word.slices_.size(); ++s) {
    const Slice& sl = word.slices_[s];
    const int x = offset(sl.pos);
    const int W = acc.target();
    switch (sl.kind) {
      case SliceKind::Cup: {
        int c = word.cup_component_[s];
        int w = width(c);
        if (w > 0) acc = compose(acc, nested_cup(ring, W, x, w));
        level.insert(level.begin() + sl.pos, {c, c});
        break;
      }
      case SliceKind::Cap: {
        int w = width(level[sl.pos]);
        if (w > 0) acc = compose(acc, nested_cap(ring, W, x, w));
        level.erase(level.begin() + sl.pos, level.begin() + sl.pos + 2);
        break;
      }
      case SliceKind::Over:
      case SliceKind::Under: {
        int a = width(level[sl.pos]), b = width(level[sl.pos + 1]);
        acc = apply_block(std::move(acc), x, a, b, sl.kind == SliceKind::Over);
        std::swap(level[sl.pos], level[sl.pos + 1]);
        break;
      }
      case SliceKind::Box: {
        const TLMorphism& box = *sl.box;
        if (box.ring() != ring) throw SkeinError(ErrorCode::ModeMismatch, "box over a different ring");
        acc = compose(acc, pad(box, x, W - x - box.source()));
        break;
      }
    }
  }
  return acc;
}

TLMorphism crossing_block(const Ring& ring, int a, int b, bool over) {
  return apply_block(identity(ring, a + b), 0, a, b, over);
}

TLMorphism thread(const TangleWord& word, const std::vector<std::pair<int, IntPoly>>& threads,
                  const Ring& ring) {
  if (threads.empty()) return resolve(word, ring);
  auto rest = std::vector<std::pair<int, IntPoly>>(threads.begin() + 1, threads.end());
  const auto& [component, poly] = threads.front();
  TLMorphism acc(ring, word.bottom_physical(), word.top_physical());
  bool first = true;
  for (const auto& [degree, coeff] : poly.coeffs()) {
    TLMorphism term = thread(word.with_width(component, degree), rest, ring)
                          .scaled(ring.integer(static_cast<long>(coeff)));
    acc = first ? term : acc + term;
    first = false;
  }
  if (first) (void)word.with_width(component, 1);  // zero polynomial: still validate
  return acc;
}

TLMorphism thread(const TangleWord& word, int component, const IntPoly& poly, const Ring& ring) {
  return thread(word, {{component, poly}}, ring);
}

// ---------------------------------------------------------------- encircling

TangleWord encircle_word(int m, bool mirrored) {
  if (m < 0) throw SkeinError(ErrorCode::InvalidArgument, "negative strand count");
  TangleWord w(m);
  w.cup(m);
  // Lower arc: each vertical strand moves right past the loop's left leg.
  // The vertical strand is the moving strand, so "over" puts the loop below.
  for (int j = m - 1; j >= 0; --j) mirrored ? w.under(j) : w.over(j);
  // Upper arc: the leg moves back right, on top of the strands.
  for (int p = 0; p < m; ++p) mirrored ? w.under(p) : w.over(p);
  w.cap(m);
  return w;
}

TLMorphism encircle(int m, const IntPoly& poly, const Ring& ring, bool mirrored) {
  TangleWord w = encircle_word(m, mirrored);
  return thread(w, w.component_of_cup(0), poly, ring);
}

// ---------------------------------------------------------------- green strands

TLMorphism expand_green(const TangleWord& word, int n, const Ring& ring) {
  if (n < 1) throw SkeinError(ErrorCode::InvalidArgument, "cable width must be >= 1");
  TangleWord w = word;
  std::vector<std::pair<int, IntPoly>> threads;
  std::vector<char> open_green(w.parent_.size(), 0);
  for (const auto& info : w.components()) {
    if (!info.green) continue;
    if (info.closed) {
      threads.emplace_back(info.id, chebyshev_T(n));
    } else {
      open_green[info.id] = 1;
      // Boxes were sized at build time, so a boxed green strand must already
      // carry the cable width.
      if (info.boxed && info.width != n)
        throw SkeinError(ErrorCode::MalformedWord, "green strand through a box must have width n");
      w.comp_width_[info.id] = n;
    }
  }
  // Open green strands must meet a box right after entering and right before
  // leaving: fresh[i] marks a strand not yet touched since the bottom,
  // boxed_last[i] marks a strand whose latest slice was a box.
  std::vector<int> level = w.bottom_;
  std::vector<char> fresh(level.size(), 1), boxed_last(level.size(), 0);
  auto dangling = [&](int c) {
    return open_green[w.find(c)] != 0;
  };
  auto touch = [&](int pos, bool by_box) {
    if (fresh[pos] && !by_box && dangling(level[pos]))
      throw SkeinError(ErrorCode::DanglingGreenEnd, "green strand enters from the bottom without a projector");
    fresh[pos] = 0;
    boxed_last[pos] = by_box;
  };
  for (size_t s = 0; s < w.slices_.size(); ++s) {
    const Slice& sl = w.slices_[s];
    switch (sl.kind) {
      case SliceKind::Cup: {
        int c = w.cup_component_[s];
        level.insert(level.begin() + sl.pos, {c, c});
        fresh.insert(fresh.begin() + sl.pos, {0, 0});
        boxed_last.insert(boxed_last.begin() + sl.pos, {0, 0});
        break;
      }
      case SliceKind::Cap:
        touch(sl.pos, false);
        touch(sl.pos + 1, false);
        level.erase(level.begin() + sl.pos, level.begin() + sl.pos + 2);
        fresh.erase(fresh.begin() + sl.pos, fresh.begin() + sl.pos + 2);
        boxed_last.erase(boxed_last.begin() + sl.pos, boxed_last.begin() + sl.pos + 2);
        break;
      case SliceKind::Over:
      case SliceKind::Under:
        touch(sl.pos, false);
        touch(sl.pos + 1, false);
        std::swap(level[sl.pos], level[sl.pos + 1]);
        std::swap(fresh[sl.pos], fresh[sl.pos + 1]);
        std::swap(boxed_last[sl.pos], boxed_last[sl.pos + 1]);
        break;
      case SliceKind::Box:
        for (int i = sl.pos; i < sl.pos + sl.span; ++i) touch(i, true);
        break;
    }
  }
  for (size_t i = 0; i < level.size(); ++i)
    if (dangling(level[i]) && !boxed_last[i])
      throw SkeinError(ErrorCode::DanglingGreenEnd, "green strand leaves at the top without a projector");
  return thread(w, threads, ring);
}

}  // namespace skein
