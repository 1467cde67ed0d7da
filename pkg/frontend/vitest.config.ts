import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "happy-dom",
    // same origin as the e2e server, so fetch skips CORS preflight
    environmentOptions: {
      happyDOM: { url: "http://127.0.0.1:8799/ui/" },
    },
    testTimeout: 30_000,
    hookTimeout: 120_000,
  },
});
