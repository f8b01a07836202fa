import { defineConfig } from "vitest/config";

// The dev server proxies /api to a locally running `linky serve`.
export default defineConfig({
  server: {
    port: 5173,
    proxy: {
      "/api": {
        target: process.env.LINKY_API ?? "http://127.0.0.1:8040",
        changeOrigin: true,
      },
    },
  },
  test: {
    environment: "happy-dom",
    // The page origin matches the e2e server (tests/e2e.setup.ts) so the
    // app's API calls are same-origin under happy-dom's CORS rules.
    environmentOptions: {
      happyDOM: { url: "http://127.0.0.1:8731" },
    },
    globalSetup: ["tests/e2e.setup.ts"],
    include: ["tests/**/*.test.ts"],
    testTimeout: 30000,
    hookTimeout: 60000,
  },
});
