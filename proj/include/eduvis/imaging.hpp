#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eduvis::imaging {

struct Color {
    std::uint8_t r = 0, g = 0, b = 0, a = 255;
};

inline constexpr Color kWhite{255, 255, 255, 255};
inline constexpr Color kBlack{0, 0, 0, 255};

// Named CSS-ish color or #rgb/#rrggbb; unknown names fall back to mid gray.
Color parse_color(const std::string& text);

class Canvas {
public:
    Canvas(int width, int height, Color background = kWhite);

    int width() const { return width_; }
    int height() const { return height_; }

    void set_pixel(int x, int y, Color c);
    Color pixel(int x, int y) const;

    void fill(Color c);
    void fill_rect(int x, int y, int w, int h, Color c);
    void stroke_rect(int x, int y, int w, int h, Color c, int thickness = 1);
    void line(int x0, int y0, int x1, int y1, Color c);
    void fill_circle(int cx, int cy, int radius, Color c);
    void stroke_circle(int cx, int cy, int radius, Color c);
    void fill_polygon(const std::vector<std::pair<double, double>>& points, Color c);
    void blit(const Canvas& src, int x, int y);

    // 5x7 bitmap font, scaled by an integer factor; advance is 6*scale px.
    void draw_text(int x, int y, const std::string& text, Color c, int scale = 1);
    static int text_width(const std::string& text, int scale = 1);
    static int text_height(int scale = 1) { return 7 * scale; }

    const std::vector<std::uint8_t>& rgba() const { return pixels_; }

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> pixels_;  // RGBA, row-major
};

// Deterministic PNG encoding: RGBA8, stored (uncompressed) deflate blocks,
// byte-identical for identical pixels on any platform.
std::string encode_png(const Canvas& canvas);

struct ImageInfo {
    std::string format;  // "png", "jpeg", "gif", "bmp"
    int width = 0;
    int height = 0;
};

// Sniffs magic bytes and header dimensions of common raster formats;
// nullopt when the payload is not a supported raster image.
std::optional<ImageInfo> sniff_image(std::string_view bytes);

}  // namespace eduvis::imaging
