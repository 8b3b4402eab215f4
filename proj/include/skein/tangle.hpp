#pragma once

// Framed tangles as bottom-to-top slice words.
//
// A word acts on logical strands. Each logical strand belongs to a component
// and is drawn as `width` parallel physical strands (blackboard framing), so
// cabling a component only changes its width. Resolution expands every
// physical crossing with the Kauffman bracket:
//   Over(i)  = v Id + v^{-1} e_i   (strand from bottom i to top i+1 on top)
//   Under(i) = v^{-1} Id + v e_i

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "skein/chebyshev.hpp"
#include "skein/diagram.hpp"

namespace skein {

enum class SliceKind { Cup, Cap, Over, Under, Box };

struct Slice {
  SliceKind kind;
  int pos;  // leftmost logical strand involved
  int span = 2;  // logical strands consumed (Box) or created (Cup)
  int width = 1;  // Cup: physical width of the new component
  std::shared_ptr<const TLMorphism> box;  // Box only; endomorphism
  std::string label;
};

struct ComponentInfo {
  int id = 0;
  bool closed = false;  // no boundary endpoints
  bool boxed = false;   // passes through a Box
  bool green = false;
  int width = 1;
};

class TangleWord {
 public:
  // bottom_widths: physical width of each logical strand entering from below.
  explicit TangleWord(std::vector<int> bottom_widths);
  explicit TangleWord(int bottom_strands) : TangleWord(std::vector<int>(bottom_strands, 1)) {}

  // Each builder validates positions against the current logical count and
  // returns *this. Cup inserts two logical strands at pos, pos+1.
  TangleWord& cup(int pos, int width = 1, bool green = false);
  TangleWord& cap(int pos);
  TangleWord& over(int pos);
  TangleWord& under(int pos);
  // Box acting on logical strands [pos, pos+span); its source must equal the
  // total physical width there.
  TangleWord& box(int pos, int span, TLMorphism morphism, std::string label = "");
  // Appends another word on top (its bottom must match this top).
  TangleWord& then(const TangleWord& upper);

  int logical_count() const { return static_cast<int>(current_.size()); }
  const std::vector<Slice>& slices() const { return slices_; }
  int bottom_physical() const;
  int top_physical() const;

  // Component id of the strands created by the Cup at slice index s.
  int component_of_cup(int slice_index) const;
  // Component id of the bottom logical strand i.
  int component_of_bottom(int i) const;
  std::vector<ComponentInfo> components() const;
  void mark_green(int component, bool green = true);

  // Override a component's width (0 removes it). Only closed, unboxed
  // components may change width.
  TangleWord with_width(int component, int width) const;

  std::string to_string() const;

 private:
  friend TLMorphism resolve(const TangleWord&, const Ring&);
  friend TLMorphism expand_green(const TangleWord&, int, const Ring&);

  std::vector<int> bottom_;               // component of each bottom logical strand
  std::vector<int> current_;              // component of each logical strand at the top
  std::vector<Slice> slices_;
  std::vector<int> cup_component_;        // per slice, -1 unless Cup
  std::vector<int> comp_width_;
  std::vector<char> comp_green_;
  std::vector<char> comp_boxed_;
  std::vector<int> parent_;               // union-find over component ids
  int find(int c) const;
  int new_component(int width, bool green);
  void unite(int a, int b);
};

TLMorphism resolve(const TangleWord& word, const Ring& ring);

// Sum over the monomials of P of the word with the component cabled.
TLMorphism thread(const TangleWord& word, int component, const IntPoly& poly, const Ring& ring);
// Several components threaded at once (product expansion).
TLMorphism thread(const TangleWord& word, const std::vector<std::pair<int, IntPoly>>& threads,
                  const Ring& ring);

// Physical crossing block: logical strand of width a crossing (over or under)
// one of width b, the left strand moving right. Result is (a+b) -> (a+b).
TLMorphism crossing_block(const Ring& ring, int a, int b, bool over);

// A loop around m vertical strands, threaded by P. The lower arc passes under
// the strands and the upper arc over; mirrored swaps the two.
TangleWord encircle_word(int m, bool mirrored = false);
TLMorphism encircle(int m, const IntPoly& poly, const Ring& ring, bool mirrored = false);

// Green components: closed ones are threaded by T_n, open ones become
// n-cables whose boundary ends must enter a Box (DanglingGreenEnd otherwise).
TLMorphism expand_green(const TangleWord& word, int n, const Ring& ring);

}  // namespace skein
