/** tfjs backend selection: wasm where available, plain cpu otherwise. */
import * as tf from '@tensorflow/tfjs';

let initialized: Promise<string> | null = null;

export function initBackend(): Promise<string> {
  if (initialized === null) {
    initialized = (async () => {
      try {
        require('@tensorflow/tfjs-backend-wasm');
        await tf.setBackend('wasm');
      } catch {
        await tf.setBackend('cpu');
      }
      await tf.ready();
      return tf.getBackend();
    })();
  }
  return initialized;
}
