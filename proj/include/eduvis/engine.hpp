#pragma once

#include <string>
#include <vector>

#include "eduvis/imaging.hpp"
#include "eduvis/markup.hpp"

namespace eduvis::engine {

inline constexpr const char* kEngineName = "eduvis-pageengine";
inline constexpr const char* kEngineVersion = "1.0";

// One activatable control discovered in a page state. Locators use the
// element id when present ("#efficiency-slider"), otherwise a tag-scoped
// document-order index ("button:nth(2)"), so a trigger path replays against
// a fresh load.
struct ControlAction {
    std::string locator;
    std::string verb;   // "click" or "set"
    std::string value;  // slider stop for "set"

    std::string to_string() const;
    static ControlAction parse(const std::string& text);
};

// Deterministic interpreter for self-contained pages. Interactivity follows
// the declarative contract emitted by the synthesis templates:
//   data-toggle / data-show / data-hide  - visibility of referenced ids
//   data-tab-group + data-tab-target    - tab panels (show target, hide rest)
//   <input type="range" data-bind=P>    - parameter P; elements carrying
//       data-display=P mirror its value, data-bar=P scale with value/data-max
//   <a href="#x">                       - sets the current in-page anchor
// Inline <script> is carried in the document (real browsers run it) but is
// not executed here; actions without declarative semantics simply produce a
// duplicate state.
class Page {
public:
    // Throws ErrorKind::render when the text contains no document at all.
    static Page load(const std::string& html);

    const markup::Document& dom() const { return dom_; }

    // Visible controls in document order; sliders contribute one action per
    // stop position (fractions of [min,max], default {0, 0.5, 1}).
    std::vector<ControlAction> controls(const std::vector<double>& slider_stops = {0.0, 0.5,
                                                                                   1.0}) const;

    // Applies an action to a copy of this page. Unknown locators throw
    // ErrorKind::render (a trigger path that no longer resolves).
    Page apply(const ControlAction& action) const;

    // Canonical serialization of the visible document: hidden subtrees and
    // volatile attributes (data-volatile*) elided, attributes sorted, text
    // whitespace collapsed.
    std::string serialize_visible() const;
    std::string state_hash() const;  // sha256 of serialize_visible()

    // Wireframe screenshot: block layout, real text via the bitmap font,
    // inline SVG subtrees rasterized in place.
    imaging::Canvas render(int width, int height) const;

private:
    markup::Document dom_;
};

bool is_hidden(const markup::Node& node);

}  // namespace eduvis::engine
