#include <colorstat/imagecodec.hpp>

#include <png.h>

#include <cstdio>
#include <csetjmp>
#include <cstring>
#include <memory>
#include <vector>

// libjpeg headers must come after <cstdio>
#include <jerror.h>
#include <jpeglib.h>

namespace colorstat {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

RgbImage from_interleaved(int w, int h, const std::vector<std::uint8_t>& rgb) {
    RgbImage img(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t o = (static_cast<std::size_t>(y) * w + x) * 3;
            img.r.at(x, y) = rgb[o];
            img.g.at(x, y) = rgb[o + 1];
            img.b.at(x, y) = rgb[o + 2];
        }
    }
    return img;
}

// ---------------------------------------------------------------------------
// PNG
// ---------------------------------------------------------------------------

// Error handling keeps libpng's longjmp discipline: the handler records the
// message and jumps back to the caller's setjmp point. All C++ objects are
// constructed before setjmp so no destructor is skipped.
struct PngErrorCtx {
    char message[256] = "unknown";
};

void png_error_record(png_structp png, png_const_charp msg) {
    auto* ctx = static_cast<PngErrorCtx*>(png_get_error_ptr(png));
    if (ctx) std::snprintf(ctx->message, sizeof(ctx->message), "%s", msg);
    longjmp(png_jmpbuf(png), 1);
}

void png_warning_sink(png_structp, png_const_charp) {}

RgbImage load_png_file(std::FILE* f, const std::string& path) {
    PngErrorCtx errctx;
    std::vector<std::uint8_t> rgb;
    std::vector<png_bytep> rows;
    int w = 0, h = 0;
    bool layout_ok = true;

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &errctx,
                                             png_error_record, png_warning_sink);
    if (!png) throw DecodeError("png: cannot allocate reader");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError("png: cannot allocate info");
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DecodeError("png: " + std::string(errctx.message) + " in " + path);
    }

    png_init_io(png, f);
    png_read_info(png, info);

    png_set_expand(png);  // palette -> rgb, low bit depth -> 8, tRNS -> alpha
    png_set_strip_16(png);
    png_set_gray_to_rgb(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    w = static_cast<int>(png_get_image_width(png, info));
    h = static_cast<int>(png_get_image_height(png, info));
    layout_ok = png_get_channels(png, info) == 3 && png_get_bit_depth(png, info) == 8;

    if (layout_ok && w > 0 && h > 0) {
        rgb.resize(static_cast<std::size_t>(w) * h * 3);
        rows.resize(static_cast<std::size_t>(h));
        for (int y = 0; y < h; ++y) {
            rows[static_cast<std::size_t>(y)] = rgb.data() + static_cast<std::size_t>(y) * w * 3;
        }
        png_read_image(png, rows.data());
        png_read_end(png, nullptr);
    }
    png_destroy_read_struct(&png, &info, nullptr);

    if (!layout_ok) throw DecodeError("png: unexpected layout after expansion in " + path);
    return from_interleaved(w, h, rgb);
}

// ---------------------------------------------------------------------------
// JPEG
// ---------------------------------------------------------------------------

struct JpegErrorMgr {
    jpeg_error_mgr base;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    longjmp(err->jump, 1);
}

RgbImage load_jpeg_file(std::FILE* f, const std::string& path) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    std::vector<std::uint8_t> rgb;
    int w = 0, h = 0;

    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;

    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw DecodeError("jpeg: " + std::string(err.message) + " in " + path);
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, f);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;  // grayscale sources are replicated
    jpeg_start_decompress(&cinfo);

    w = static_cast<int>(cinfo.output_width);
    h = static_cast<int>(cinfo.output_height);
    rgb.resize(static_cast<std::size_t>(w) * h * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = rgb.data() + static_cast<std::size_t>(cinfo.output_scanline) * w * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    // libjpeg downgrades truncation to a warning and pads the image; a
    // corrupt-data warning still has to surface as a decode failure
    const long warnings = cinfo.err->num_warnings;
    jpeg_destroy_decompress(&cinfo);
    if (warnings > 0) {
        throw DecodeError("jpeg: truncated or corrupt data in " + path);
    }
    return from_interleaved(w, h, rgb);
}

}  // namespace

RgbImage load_image(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw IoError("load_image: cannot open " + path);

    unsigned char magic[8] = {};
    const std::size_t got = std::fread(magic, 1, sizeof(magic), f.get());
    std::rewind(f.get());

    static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
    if (got >= 8 && std::memcmp(magic, png_sig, 8) == 0) {
        return load_png_file(f.get(), path);
    }
    if (got >= 2 && magic[0] == 0xff && magic[1] == 0xd8) {
        return load_jpeg_file(f.get(), path);
    }
    throw UnsupportedFormat("load_image: not a PNG or JPEG file: " + path);
}

void save_png(const std::string& path, const RgbImage& img) {
    img.validate();
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw IoError("save_png: cannot open " + path);

    PngErrorCtx errctx;
    const int w = img.width(), h = img.height();
    std::vector<std::uint8_t> row(static_cast<std::size_t>(w) * 3);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &errctx,
                                              png_error_record, png_warning_sink);
    if (!png) throw IoError("save_png: cannot allocate writer");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw IoError("save_png: cannot allocate info");
    }

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw IoError("save_png: " + std::string(errctx.message) + " writing " + path);
    }

    png_init_io(png, f.get());
    png_set_IHDR(png, info, static_cast<png_uint_32>(w), static_cast<png_uint_32>(h), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            row[static_cast<std::size_t>(x) * 3] = img.r.at(x, y);
            row[static_cast<std::size_t>(x) * 3 + 1] = img.g.at(x, y);
            row[static_cast<std::size_t>(x) * 3 + 2] = img.b.at(x, y);
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

std::string codec_description() {
    return std::string("libpng ") + PNG_LIBPNG_VER_STRING + ", libjpeg " +
           std::to_string(JPEG_LIB_VERSION);
}

}  // namespace colorstat
